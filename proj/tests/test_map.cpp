#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "mapcount/errors.hpp"
#include "mapcount/map.hpp"
#include "mapcount/map_io.hpp"

using namespace mapcount;

namespace {

CombinatorialMap loop_map() {
  return CombinatorialMap::validated({1, 0}, {1, 0}, 0);
}

CombinatorialMap bridge_map() {
  return CombinatorialMap::validated({1, 0}, {0, 1}, 0);
}

// Simple cycle on ell edges and ell vertices, rooted on one of its two
// faces. Valid for ell >= 2 (ell = 2 is the doubled edge).
CombinatorialMap polygon(int ell) {
  std::vector<int> alpha(2 * ell), sigma(2 * ell);
  for (int i = 0; i < ell; ++i) {
    alpha[2 * i] = 2 * i + 1;
    alpha[2 * i + 1] = 2 * i;
    sigma[2 * i + 1] = (2 * i + 2) % (2 * ell);
    sigma[(2 * i + 2) % (2 * ell)] = 2 * i + 1;
  }
  return CombinatorialMap::validated(std::move(alpha), std::move(sigma), 0);
}

CombinatorialMap quad_with_diagonal() {
  return read_map_file(std::string(MAPCOUNT_DATA_DIR) + "/m8.map");
}

CombinatorialMap hexagon_chord_pendant() {
  return read_map_file(std::string(MAPCOUNT_DATA_DIR) + "/pfig.map");
}

CombinatorialMap relabeled(const CombinatorialMap& m, std::mt19937& rng) {
  const int h = m.half_edge_count();
  std::vector<int> pi(h);
  std::iota(pi.begin(), pi.end(), 0);
  std::shuffle(pi.begin(), pi.end(), rng);
  std::vector<int> alpha(h), sigma(h);
  for (int x = 0; x < h; ++x) {
    alpha[pi[x]] = pi[m.alpha(x)];
    sigma[pi[x]] = pi[m.sigma(x)];
  }
  return CombinatorialMap::validated(std::move(alpha), std::move(sigma),
                                     pi[m.root()]);
}

}  // namespace

TEST_CASE("empty map") {
  const CombinatorialMap e = CombinatorialMap::empty_map();
  CHECK(e.is_empty());
  CHECK(e.edge_count() == 0);
  CHECK(e.half_edge_count() == 0);
  CHECK_FALSE(loop_map().is_empty());
}

TEST_CASE("loop") {
  const CombinatorialMap m = loop_map();
  CHECK(m.edge_count() == 1);
  CHECK(m.vertex_count() == 1);
  CHECK(m.face_count() == 2);
  CHECK(m.face_valency(m.root_face()) == 1);
  CHECK_FALSE(m.is_bridge(0));

  const PatternDescriptor d = m.descriptor();
  CHECK(d.ell == 1);
  CHECK(d.inner_edges == 0);
  CHECK(d.outer_edges == 0);
  CHECK(d.inner_valency_sum == 1);
  CHECK(d.inner_valencies == std::vector<int>{1});
  CHECK(d.rotational_count == 1);
}

TEST_CASE("bridge") {
  const CombinatorialMap m = bridge_map();
  CHECK(m.edge_count() == 1);
  CHECK(m.vertex_count() == 2);
  CHECK(m.face_count() == 1);
  CHECK(m.face_valency(m.root_face()) == 2);
  CHECK(m.is_bridge(0));
  CHECK(m.is_bridge(1));

  const PatternDescriptor d = m.descriptor();
  CHECK(d.ell == 2);
  CHECK(d.inner_edges == 0);
  CHECK(d.outer_edges == 1);
  CHECK(d.inner_valency_sum == 0);
  CHECK(d.inner_valencies.empty());
  CHECK(d.rotational_count == 2);
}

TEST_CASE("polygons") {
  for (int ell = 2; ell <= 7; ++ell) {
    CAPTURE(ell);
    const CombinatorialMap m = polygon(ell);
    CHECK(m.edge_count() == ell);
    CHECK(m.vertex_count() == ell);
    CHECK(m.face_count() == 2);
    CHECK(m.face_valency(m.root_face()) == ell);
    CHECK(m.rotational_iso_count() == ell);

    const PatternDescriptor d = m.descriptor();
    CHECK(d.ell == ell);
    CHECK(d.inner_edges == 0);
    CHECK(d.outer_edges == 0);
    CHECK(d.inner_valencies == std::vector<int>{ell});
    CHECK(d.rotational_count == ell);
    for (int h = 0; h < 2 * ell; ++h) CHECK_FALSE(m.is_bridge(h));
  }
}

TEST_CASE("quadrilateral with diagonal") {
  const CombinatorialMap m = quad_with_diagonal();
  CHECK(m.edge_count() == 5);
  CHECK(m.vertex_count() == 4);
  CHECK(m.face_count() == 3);
  CHECK(m.rotational_iso_count() == 2);

  const PatternDescriptor d = m.descriptor();
  CHECK(d.ell == 4);
  CHECK(d.inner_edges == 1);
  CHECK(d.outer_edges == 0);
  CHECK(d.inner_valency_sum == 6);
  CHECK(d.inner_valencies == std::vector<int>({3, 3}));
  CHECK(d.rotational_count == 2);
}

TEST_CASE("hexagon with chord and pendant edge") {
  const CombinatorialMap m = hexagon_chord_pendant();
  CHECK(m.edge_count() == 8);
  CHECK(m.rotational_iso_count() == 1);

  const PatternDescriptor d = m.descriptor();
  CHECK(d.ell == 8);
  CHECK(d.inner_edges == 1);
  CHECK(d.outer_edges == 1);
  CHECK(d.inner_valency_sum == 8);
  CHECK(d.inner_valencies == std::vector<int>({4, 4}));
  CHECK(d.rotational_count == 1);
}

TEST_CASE("validation rejects bad input") {
  // Fixed point in alpha.
  CHECK_THROWS_AS(CombinatorialMap::validated({0, 1}, {1, 0}, 0), NotInvolution);
  // alpha not an involution.
  CHECK_THROWS_AS(CombinatorialMap::validated({1, 2, 0, 3}, {0, 1, 2, 3}, 0),
                  NotInvolution);
  // One vertex per loop, two loops: disconnected.
  CHECK_THROWS_AS(CombinatorialMap::validated({1, 0, 3, 2}, {1, 0, 3, 2}, 0),
                  NotConnected);
  // One vertex, one face on two edges: the torus rotation system.
  CHECK_THROWS_AS(CombinatorialMap::validated({1, 0, 3, 2}, {2, 3, 1, 0}, 0),
                  NotPlanar);
  // sigma not a permutation.
  CHECK_THROWS_AS(CombinatorialMap::validated({1, 0}, {0, 0}, 0),
                  std::invalid_argument);
  // sigma value out of range.
  CHECK_THROWS_AS(CombinatorialMap::validated({1, 0}, {0, 2}, 0),
                  std::invalid_argument);
  // Size mismatch and bad root.
  CHECK_THROWS_AS(CombinatorialMap::validated({1, 0}, {0, 1, 2, 3}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(CombinatorialMap::validated({1, 0}, {1, 0}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(CombinatorialMap::validated({}, {}, 0), std::invalid_argument);
}

TEST_CASE("incidence structure is consistent") {
  for (const CombinatorialMap& m :
       {loop_map(), bridge_map(), polygon(5), quad_with_diagonal(),
        hexagon_chord_pendant()}) {
    int total = 0;
    for (int f = 0; f < m.face_count(); ++f) total += m.face_valency(f);
    CHECK(total == m.half_edge_count());

    // face_cycles follow face_next and agree with face_of.
    for (int f = 0; f < m.face_count(); ++f) {
      const auto& cyc = m.face_cycles()[f];
      for (size_t i = 0; i < cyc.size(); ++i) {
        CHECK(m.face_of(cyc[i]) == f);
        CHECK(m.face_next(cyc[i]) == cyc[(i + 1) % cyc.size()]);
      }
    }
    for (int h = 0; h < m.half_edge_count(); ++h) {
      CHECK(m.vertex_of(h) == m.vertex_of(m.sigma(h)));
      CHECK(m.alpha(m.alpha(h)) == h);
    }

    const auto& es = m.edges();
    CHECK(static_cast<int>(es.size()) == m.edge_count());
    for (size_t i = 0; i < es.size(); ++i) {
      CHECK(es[i].first < es[i].second);
      CHECK(m.alpha(es[i].first) == es[i].second);
      if (i > 0) CHECK(es[i - 1].first < es[i].first);
    }
  }
}

TEST_CASE("canonical code is a relabeling invariant") {
  std::mt19937 rng(99);
  const std::vector<CombinatorialMap> maps = {
      loop_map(), bridge_map(),          polygon(2),
      polygon(4), quad_with_diagonal(),  hexagon_chord_pendant()};
  for (const CombinatorialMap& m : maps) {
    const std::string code = m.canonical_code();
    const PatternDescriptor d = m.descriptor();
    for (int trial = 0; trial < 100; ++trial) {
      const CombinatorialMap r = relabeled(m, rng);
      CHECK(r.canonical_code() == code);
      CHECK(r.descriptor() == d);
    }
  }
  // Distinct rooted maps get distinct codes.
  CHECK(loop_map().canonical_code() != bridge_map().canonical_code());
  CHECK(polygon(3).canonical_code() != polygon(4).canonical_code());
}

TEST_CASE("rerooting") {
  const CombinatorialMap m = quad_with_diagonal();
  // Rerooting anywhere preserves the unrooted structure counts.
  for (int h = 0; h < m.half_edge_count(); ++h) {
    const CombinatorialMap r = m.rerooted(h);
    CHECK(r.root() == h);
    CHECK(r.vertex_count() == m.vertex_count());
    CHECK(r.face_count() == m.face_count());
  }
  // The two root-face corners related by the half-turn give the same rooted
  // map; rerooting onto a triangle face does not.
  CHECK(m.rotational_iso_count() == 2);

  const CombinatorialMap b = bridge_map();
  CHECK(b.rerooted(1).canonical_code() == b.canonical_code());
}
