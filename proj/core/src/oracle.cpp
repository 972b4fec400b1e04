#include "mapcount/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mapcount/errors.hpp"

namespace mapcount {

namespace {

constexpr int kFastEdges = 6;
constexpr int kMaxEdges = 7;

// Backtracking search over vertex rotations with the pairing h <-> h^1 and
// root half-edge 0. A component of 0 that is closed under the pairing and
// the rotation assigned so far can never grow again, so the subtree is
// pruned; reaching a full assignment therefore implies connectivity, and
// planarity is the Euler relation on the completed rotation.
struct Search {
  int half_edges = 0;
  int edge_count = 0;
  uint32_t full = 0;
  uint32_t used = 0;
  std::vector<int> sigma, sigma_inv, alpha;
  std::vector<int> stack;
  std::unordered_set<std::string>* found = nullptr;

  void init(int n) {
    edge_count = n;
    half_edges = 2 * n;
    full = (1u << half_edges) - 1;
    used = 0;
    sigma.assign(half_edges, -1);
    sigma_inv.assign(half_edges, -1);
    alpha.resize(half_edges);
    for (int i = 0; i < half_edges; ++i) alpha[i] = i ^ 1;
    stack.reserve(half_edges);
  }

  void expand(uint32_t& comp, int& comp_max, int seed) {
    stack.clear();
    const auto add = [&](int x) {
      if (!((comp >> x) & 1u)) {
        comp |= 1u << x;
        if (x > comp_max) comp_max = x;
        stack.push_back(x);
      }
    };
    add(seed);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      add(x ^ 1);
      if (sigma[x] >= 0) add(sigma[x]);
      if (sigma_inv[x] >= 0) add(sigma_inv[x]);
    }
  }

  void leaf() {
    int cycles = 0;
    uint32_t seen = 0;
    for (int i = 0; i < half_edges; ++i) {
      if ((seen >> i) & 1u) continue;
      ++cycles;
      for (int j = i; !((seen >> j) & 1u); j = sigma[j]) seen |= 1u << j;
    }
    seen = 0;
    for (int i = 0; i < half_edges; ++i) {
      if ((seen >> i) & 1u) continue;
      ++cycles;
      for (int j = i; !((seen >> j) & 1u); j = sigma[j ^ 1]) seen |= 1u << j;
    }
    if (cycles != edge_count + 2) return;
    found->insert(detail::canonical_code(sigma, alpha, 0));
  }

  void dfs(int h, uint32_t comp, int comp_max) {
    if (comp != full && comp_max < h) return;
    if (h == half_edges) {
      leaf();
      return;
    }
    for (int v = 0; v < half_edges; ++v) {
      if ((used >> v) & 1u) continue;
      sigma[h] = v;
      sigma_inv[v] = h;
      used |= 1u << v;
      uint32_t c = comp;
      int cm = comp_max;
      if (((comp >> h) & 1u) || ((comp >> v) & 1u)) {
        expand(c, cm, h);
        expand(c, cm, v);
      }
      dfs(h + 1, c, cm);
      used &= ~(1u << v);
      sigma_inv[v] = -1;
      sigma[h] = -1;
    }
  }
};

int unpack(const std::string& code, int at) {
  return (static_cast<unsigned char>(code[at]) << 8) |
         static_cast<unsigned char>(code[at + 1]);
}

CombinatorialMap decode(const std::string& code, int half_edges) {
  std::vector<int> sg(half_edges), al(half_edges);
  for (int i = 0; i < half_edges; ++i) {
    sg[i] = unpack(code, 4 * i);
    al[i] = unpack(code, 4 * i + 2);
  }
  CombinatorialMap m = CombinatorialMap::validated(std::move(al), std::move(sg), 0);
  if (m.canonical_code() != code)
    throw std::logic_error("enumeration produced a non-canonical representative");
  return m;
}

std::vector<CombinatorialMap> search_all(int n) {
  const int half_edges = 2 * n;
  const unsigned workers = std::max(
      1u, std::min(std::thread::hardware_concurrency(), unsigned(half_edges)));

  // Shards fix the rotation at half-edge 0; one rooted map can show up in
  // several shards, so deduplication happens after the merge.
  std::vector<std::unordered_set<std::string>> found(half_edges);
  std::atomic<int> next{0};
  const auto work = [&]() {
    int v0;
    while ((v0 = next.fetch_add(1)) < half_edges) {
      Search s;
      s.init(n);
      s.found = &found[v0];
      uint32_t comp = 0;
      int comp_max = -1;
      s.expand(comp, comp_max, 0);
      s.sigma[0] = v0;
      s.sigma_inv[v0] = 0;
      s.used = 1u << v0;
      s.expand(comp, comp_max, v0);
      s.dfs(1, comp, comp_max);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  std::unordered_set<std::string> all;
  for (auto& f : found) all.merge(f);
  std::vector<std::string> codes(all.begin(), all.end());
  std::sort(codes.begin(), codes.end());

  std::vector<CombinatorialMap> maps;
  maps.reserve(codes.size());
  for (const std::string& code : codes) maps.push_back(decode(code, half_edges));
  return maps;
}

EnumerationResult build_result(int n, std::vector<CombinatorialMap> maps) {
  EnumerationResult r;
  r.n = n;
  r.map_count = Rational(static_cast<long long>(maps.size()));
  r.valency_histogram.assign(2 * n + 1, Rational());
  r.pure_gon_counts.assign(2 * n + 1, Rational());
  for (const CombinatorialMap& m : maps) {
    if (m.is_empty()) {
      r.valency_histogram[0] += 1;
      continue;
    }
    const int f = m.root_face();
    const int val = m.face_valency(f);
    r.valency_histogram[val] += 1;

    std::vector<int> es, vs;
    for (int h : m.face_cycles()[f]) {
      es.push_back(std::min(h, m.alpha(h)));
      vs.push_back(m.vertex_of(h));
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (static_cast<int>(es.size()) == val && static_cast<int>(vs.size()) == val)
      r.pure_gon_counts[val] += 1;
  }
  r.maps = std::move(maps);
  return r;
}

// A marked candidate inside one host map: retained edge subset plus the
// face of the copy that plays its root face.
long long count_in_host(const CombinatorialMap& host, const std::string& target,
                        int pattern_edges, int pattern_r, bool submap) {
  const int n = host.edge_count();
  const int p = pattern_edges;
  if (p < 1 || p > n) return 0;
  const int half_edges = 2 * n;
  const auto& edges = host.edges();
  const int faces = host.face_count();
  const int sub_size = 2 * p;

  std::vector<int> pick(p);
  for (int i = 0; i < p; ++i) pick[i] = i;

  std::vector<char> in_sub(half_edges), picked(n);
  std::vector<int> idx(half_edges), sub_half, sigma_c(sub_size),
      alpha_c(sub_size), face_id(sub_size), parent(faces), region_faces(faces),
      face_region, match_count, copy_valency, queue;
  sub_half.reserve(sub_size);

  std::vector<int> host_face_valency(faces, 0);
  for (int h = 0; h < half_edges; ++h) ++host_face_valency[host.face_of(h)];

  const auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  long long total = 0;
  for (;;) {
    std::fill(in_sub.begin(), in_sub.end(), 0);
    std::fill(picked.begin(), picked.end(), 0);
    sub_half.clear();
    for (int e : pick) {
      picked[e] = 1;
      in_sub[edges[e].first] = in_sub[edges[e].second] = 1;
    }
    for (int h = 0; h < half_edges; ++h)
      if (in_sub[h]) {
        idx[h] = static_cast<int>(sub_half.size());
        sub_half.push_back(h);
      }

    // Rotation inherited by erasure: skip to the next retained half-edge
    // around the same vertex.
    for (int i = 0; i < sub_size; ++i) {
      int y = host.sigma(sub_half[i]);
      while (!in_sub[y]) y = host.sigma(y);
      sigma_c[i] = idx[y];
      alpha_c[i] = idx[host.alpha(sub_half[i])];
    }

    queue.assign(1, 0);
    uint32_t visited = 1;
    int reached = 1;
    while (!queue.empty()) {
      const int x = queue.back();
      queue.pop_back();
      for (int y : {sigma_c[x], alpha_c[x]}) {
        if (!((visited >> y) & 1u)) {
          visited |= 1u << y;
          ++reached;
          queue.push_back(y);
        }
      }
    }

    if (reached == sub_size) {
      int induced_faces = 0;
      std::fill(face_id.begin(), face_id.end(), -1);
      for (int i = 0; i < sub_size; ++i) {
        if (face_id[i] >= 0) continue;
        for (int j = i; face_id[j] < 0; j = sigma_c[alpha_c[j]])
          face_id[j] = induced_faces;
        ++induced_faces;
      }
      int induced_vertices = 0;
      {
        uint32_t seen = 0;
        for (int i = 0; i < sub_size; ++i) {
          if ((seen >> i) & 1u) continue;
          ++induced_vertices;
          for (int j = i; !((seen >> j) & 1u); j = sigma_c[j]) seen |= 1u << j;
        }
      }
      if (induced_vertices - p + induced_faces != 2)
        throw std::logic_error("edge erasure broke planarity");

      // Faces of the host merge into regions across erased edges; the faces
      // of the copy correspond to those regions.
      for (int f = 0; f < faces; ++f) parent[f] = f;
      for (int e = 0; e < n; ++e) {
        if (picked[e]) continue;
        const int a = find(host.face_of(edges[e].first));
        const int b = find(host.face_of(edges[e].second));
        if (a != b) parent[a] = b;
      }
      std::fill(region_faces.begin(), region_faces.end(), 0);
      for (int f = 0; f < faces; ++f) ++region_faces[find(f)];
      const int root_region = find(host.root_face());

      face_region.assign(induced_faces, -1);
      for (int i = 0; i < sub_size; ++i) {
        const int r = find(host.face_of(sub_half[i]));
        int& slot = face_region[face_id[i]];
        if (slot < 0)
          slot = r;
        else if (slot != r)
          throw std::logic_error("copy face spans distinct regions");
      }

      match_count.assign(induced_faces, 0);
      for (int i = 0; i < sub_size; ++i)
        if (detail::canonical_code(sigma_c, alpha_c, i) == target)
          ++match_count[face_id[i]];

      copy_valency.assign(induced_faces, 0);
      for (int i = 0; i < sub_size; ++i) ++copy_valency[face_id[i]];

      for (int f = 0; f < induced_faces; ++f) {
        if (match_count[f] == 0) continue;
        if (match_count[f] != pattern_r)
          throw std::logic_error("rooting multiplicity mismatch");
        bool ok;
        if (submap) {
          ok = face_region[f] == root_region;
        } else {
          // Every face of the copy except its root face must be one exact
          // host face (single face of equal valency, so the boundary walks
          // coincide), and not the host's root face.
          ok = true;
          for (int g = 0; g < induced_faces && ok; ++g) {
            if (g == f) continue;
            ok = region_faces[face_region[g]] == 1 &&
                 host_face_valency[face_region[g]] == copy_valency[g] &&
                 face_region[g] != root_region;
          }
        }
        if (ok) ++total;
      }
    }

    int i = p - 1;
    while (i >= 0 && pick[i] == n - p + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < p; ++j) pick[j] = pick[j - 1] + 1;
  }
  return total;
}

}  // namespace

namespace detail {

EnumerationResult enumerate_uncached(int n) {
  if (n == 0) {
    std::vector<CombinatorialMap> maps;
    maps.push_back(CombinatorialMap::empty_map());
    return build_result(0, std::move(maps));
  }
  return build_result(n, search_all(n));
}

}  // namespace detail

const EnumerationResult& enumerate_maps(int n, bool allow_slow) {
  if (n < 0) throw std::invalid_argument("edge count must be non-negative");
  if (n > kMaxEdges || (n > kFastEdges && !allow_slow))
    throw SizeLimitExceeded(
        "exhaustive enumeration is limited to 6 edges (7 with the slow flag), "
        "got n = " +
        std::to_string(n));

  static std::mutex mu;
  static std::map<int, EnumerationResult> cache;
  std::scoped_lock lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  const char* dir = std::getenv("MAPCOUNT_ENUM_CACHE");
  EnumerationResult r;
  bool loaded = false;
  if (dir) {
    try {
      r = read_enumeration_cache(std::string(dir) + "/enum-" +
                                 std::to_string(n) + ".txt");
      loaded = r.n == n;
    } catch (const std::exception&) {
      loaded = false;
    }
  }
  if (!loaded) {
    r = detail::enumerate_uncached(n);
    if (dir) {
      try {
        std::filesystem::create_directories(dir);
        write_enumeration_cache(
            r, std::string(dir) + "/enum-" + std::to_string(n) + ".txt");
      } catch (const std::exception&) {
        // Persisting is best-effort; the in-process result stands.
      }
    }
  }
  return cache.emplace(n, std::move(r)).first->second;
}

long long count_pure_gon(int n, int ell, bool allow_slow) {
  const EnumerationResult& r = enumerate_maps(n, allow_slow);
  if (ell < 0 || ell >= static_cast<int>(r.pure_gon_counts.size())) return 0;
  return r.pure_gon_counts[ell].as_integer().convert_to<long long>();
}

long long count_marked_patterns(const CombinatorialMap& pattern, int n,
                                bool allow_slow) {
  if (pattern.is_empty())
    throw std::invalid_argument("pattern must be non-empty");
  const EnumerationResult& r = enumerate_maps(n, allow_slow);
  const std::string target = pattern.canonical_code();
  const int p = pattern.edge_count();
  const int rot = pattern.rotational_iso_count();
  long long total = 0;
  for (const CombinatorialMap& m : r.maps)
    total += count_in_host(m, target, p, rot, false);
  return total;
}

long long count_marked_submaps(const CombinatorialMap& pattern, int n,
                               bool allow_slow) {
  if (pattern.is_empty())
    throw std::invalid_argument("pattern must be non-empty");
  const EnumerationResult& r = enumerate_maps(n, allow_slow);
  const std::string target = pattern.canonical_code();
  const int p = pattern.edge_count();
  const int rot = pattern.rotational_iso_count();
  long long total = 0;
  for (const CombinatorialMap& m : r.maps)
    total += count_in_host(m, target, p, rot, true);
  return total;
}

void write_enumeration_cache(const EnumerationResult& r,
                             const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
    out << "mapcount-enum v1\n";
    out << "n " << r.n << " count " << r.maps.size() << "\n";
    for (const CombinatorialMap& m : r.maps) {
      for (int i = 0; i < 2 * r.n; ++i) out << (i ? " " : "") << m.sigma(i);
      for (int i = 0; i < 2 * r.n; ++i) out << " " << m.alpha(i);
      out << "\n";
    }
    if (!out) throw std::runtime_error("write to '" + tmp + "' failed");
  }
  std::filesystem::rename(tmp, path);
}

EnumerationResult read_enumeration_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open enumeration cache '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line != "mapcount-enum v1")
    throw ParseError("bad enumeration cache header");
  if (!std::getline(in, line)) throw ParseError("truncated enumeration cache");

  int n = -1;
  long long count = -1;
  {
    std::istringstream ls(line);
    std::string kn, kc;
    ls >> kn >> n >> kc >> count;
    std::string extra;
    if (ls.fail() || kn != "n" || kc != "count" || n < 0 || count < 0 ||
        (ls >> extra))
      throw ParseError("bad enumeration cache size line");
  }

  std::vector<CombinatorialMap> maps;
  maps.reserve(count);
  std::string prev;
  for (long long i = 0; i < count; ++i) {
    if (!std::getline(in, line)) throw ParseError("truncated enumeration cache");
    if (n == 0) {
      maps.push_back(CombinatorialMap::empty_map());
    } else {
      std::istringstream ls(line);
      std::vector<int> sg(2 * n), al(2 * n);
      for (int& x : sg) ls >> x;
      for (int& x : al) ls >> x;
      std::string extra;
      if (ls.fail() || (ls >> extra))
        throw ParseError("bad enumeration cache map line");
      try {
        maps.push_back(
            CombinatorialMap::validated(std::move(al), std::move(sg), 0));
      } catch (const std::exception& e) {
        throw ParseError(std::string("invalid map in enumeration cache: ") +
                         e.what());
      }
    }
    std::string code = maps.back().canonical_code();
    if (i > 0 && !(prev < code))
      throw ParseError("enumeration cache is not sorted");
    prev = std::move(code);
  }
  while (std::getline(in, line))
    if (!line.empty()) throw ParseError("trailing content in enumeration cache");
  return build_result(n, std::move(maps));
}

}  // namespace mapcount
