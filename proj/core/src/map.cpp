#include "mapcount/map.hpp"

#include <algorithm>
#include <stdexcept>

#include "mapcount/errors.hpp"

namespace mapcount {

namespace detail {

std::string canonical_code(const std::vector<int>& sigma, const std::vector<int>& alpha,
                           int root) {
  const int h = static_cast<int>(sigma.size());
  if (h == 0) return {};
  thread_local std::vector<int> new_of, order;
  new_of.assign(h, -1);
  order.clear();
  order.reserve(h);
  new_of[root] = 0;
  order.push_back(root);
  for (size_t head = 0; head < order.size(); ++head) {
    const int x = order[head];
    for (const int y : {sigma[x], alpha[x]}) {
      if (new_of[y] < 0) {
        new_of[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  }
  std::string code;
  code.reserve(static_cast<size_t>(h) * 4);
  const auto put = [&code](int v) {
    code.push_back(static_cast<char>(v >> 8));
    code.push_back(static_cast<char>(v & 0xff));
  };
  for (const int x : order) {
    put(new_of[sigma[x]]);
    put(new_of[alpha[x]]);
  }
  return code;
}

}  // namespace detail

CombinatorialMap CombinatorialMap::validated(std::vector<int> alpha,
                                             std::vector<int> sigma, int root) {
  const int h = static_cast<int>(alpha.size());
  if (h == 0) throw std::invalid_argument("use empty_map() for the zero-edge map");
  if (h % 2 != 0 || static_cast<int>(sigma.size()) != h)
    throw std::invalid_argument("alpha and sigma must both list 2E half-edges");
  if (root < 0 || root >= h) throw std::invalid_argument("root half-edge out of range");

  std::vector<char> seen(h, 0);
  for (const int v : sigma) {
    if (v < 0 || v >= h) throw std::invalid_argument("sigma value out of range");
    if (seen[v]) throw std::invalid_argument("sigma is not a permutation");
    seen[v] = 1;
  }
  for (int x = 0; x < h; ++x) {
    const int a = alpha[x];
    if (a < 0 || a >= h) throw NotInvolution("alpha value out of range");
    if (a == x) throw NotInvolution("alpha fixes half-edge " + std::to_string(x));
    if (alpha[a] != x) throw NotInvolution("alpha is not an involution");
  }

  CombinatorialMap m;
  m.alpha_ = std::move(alpha);
  m.sigma_ = std::move(sigma);
  m.root_ = root;
  m.build_incidence();

  std::vector<char> reached(h, 0);
  std::vector<int> stack = {0};
  reached[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const int y : {m.sigma_[x], m.alpha_[x]}) {
      if (!reached[y]) {
        reached[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  if (count != h) throw NotConnected("half-edge structure is not connected");

  const int euler = m.vertex_count_ - m.edge_count() + m.face_count();
  if (euler != 2)
    throw NotPlanar("V - E + F = " + std::to_string(euler) + ", expected 2");
  return m;
}

CombinatorialMap CombinatorialMap::empty_map() {
  CombinatorialMap m;
  m.vertex_count_ = 1;
  // One face covering the whole sphere; it has no boundary half-edges.
  m.face_cycles_.push_back({});
  return m;
}

void CombinatorialMap::build_incidence() {
  const int h = half_edge_count();
  vertex_of_.assign(h, -1);
  vertex_count_ = 0;
  for (int x = 0; x < h; ++x) {
    if (vertex_of_[x] >= 0) continue;
    for (int y = x; vertex_of_[y] < 0; y = sigma_[y]) vertex_of_[y] = vertex_count_;
    ++vertex_count_;
  }
  face_of_.assign(h, -1);
  face_cycles_.clear();
  for (int x = 0; x < h; ++x) {
    if (face_of_[x] >= 0) continue;
    const int f = static_cast<int>(face_cycles_.size());
    std::vector<int> cycle;
    for (int y = x; face_of_[y] < 0; y = face_next(y)) {
      face_of_[y] = f;
      cycle.push_back(y);
    }
    face_cycles_.push_back(std::move(cycle));
  }
  edges_.clear();
  edges_.reserve(edge_count());
  for (int x = 0; x < h; ++x)
    if (x < alpha_[x]) edges_.emplace_back(x, alpha_[x]);
}

std::string CombinatorialMap::canonical_code() const {
  if (is_empty()) return {};
  return detail::canonical_code(sigma_, alpha_, root_);
}

CombinatorialMap CombinatorialMap::rerooted(int new_root) const {
  if (is_empty()) throw std::invalid_argument("cannot reroot the empty map");
  if (new_root < 0 || new_root >= half_edge_count())
    throw std::invalid_argument("root half-edge out of range");
  CombinatorialMap m = *this;  // incidence caches do not depend on the root
  m.root_ = new_root;
  return m;
}

int CombinatorialMap::rotational_iso_count() const {
  if (is_empty()) throw std::invalid_argument("the empty map has no rerootings");
  const std::string own = canonical_code();
  int count = 0;
  for (const int h : face_cycles_[root_face()])
    if (detail::canonical_code(sigma_, alpha_, h) == own) ++count;
  return count;
}

PatternDescriptor CombinatorialMap::descriptor() const {
  if (is_empty())
    throw std::invalid_argument("the empty map is not a valid pattern");
  PatternDescriptor d;
  const int rf = root_face();
  d.ell = face_valency(rf);
  for (int f = 0; f < face_count(); ++f) {
    if (f == rf) continue;
    d.inner_valencies.push_back(face_valency(f));
    d.inner_valency_sum += face_valency(f);
  }
  std::sort(d.inner_valencies.begin(), d.inner_valencies.end());
  for (const auto& [x, y] : edges_) {
    const bool on_root = face_of_[x] == rf || face_of_[y] == rf;
    if (!on_root) ++d.inner_edges;
    if (face_of_[x] == rf && face_of_[y] == rf) ++d.outer_edges;
  }
  d.rotational_count = rotational_iso_count();
  return d;
}

}  // namespace mapcount
