#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "mapcount/counting.hpp"
#include "mapcount/errors.hpp"
#include "mapcount/map.hpp"
#include "mapcount/map_io.hpp"

using namespace mapcount;

namespace {

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

}  // namespace

TEST_CASE("map counts") {
  const long long expect[] = {1, 2, 9, 54, 378, 2916, 24057, 208494};
  for (int n = 0; n <= 7; ++n) CHECK(m_count(n) == Rational(expect[n]));
  CHECK(m_count(8) == Rational(1876446));
  // Closed form stays integral far out.
  CHECK(m_count(40).is_integer());
}

TEST_CASE("count series matches the closed product form") {
  const Series s = m_series(30);
  for (int n = 0; n <= 30; ++n) CHECK(s.coeff(n) == m_count(n));
}

TEST_CASE("bivariate series") {
  const UZSeries M = M_bivariate(6);
  CHECK(M.coeff(0) == UPoly(1));
  // One edge: the loop roots on a 1-valent face, the bridge on a 2-valent one.
  CHECK(M.coeff(1) ==
        UPoly(std::vector<Rational>{Rational(0), Rational(1), Rational(1)}));
  CHECK(M.max_u_degree() <= 12);
  // u = 1 collapses to the univariate counts.
  CHECK(M.at_u(Rational(1)) == m_series(6));
}

TEST_CASE("count table") {
  const CountTable t(8);
  CHECK(t.order() == 8);
  CHECK(t.count(0, 0) == Rational(1));
  CHECK(t.count(1, 1) == Rational(1));
  CHECK(t.count(1, 2) == Rational(1));

  const long long row2[] = {2, 2, 3, 2};
  for (int k = 1; k <= 4; ++k) CHECK(t.count(2, k) == Rational(row2[k - 1]));
  const long long row3[] = {9, 9, 11, 10, 10, 5};
  for (int k = 1; k <= 6; ++k) CHECK(t.count(3, k) == Rational(row3[k - 1]));
  const long long row4[] = {54, 54, 63, 58, 55, 45, 35, 14};
  for (int k = 1; k <= 8; ++k) CHECK(t.count(4, k) == Rational(row4[k - 1]));

  for (int n = 0; n <= 8; ++n) {
    CHECK(t.row_sum(n) == m_count(n));
    CHECK(t.max_valency(n) == 2 * n);
    CHECK(t.count(n, 2 * n + 1) == Rational(0));
  }
}

TEST_CASE("simple-polygon root-face series") {
  const Series f2 = F_ell(2, 8);
  CHECK(f2.valuation() == 2);
  CHECK(f2.coeff(2) == Rational(1));
  CHECK(f2.coeff(3) == Rational(5));
  const Series f3 = F_ell(3, 8);
  CHECK(f3.coeff(3) == Rational(1));
  CHECK(f3.coeff(4) == Rational(9));
  const Series f4 = F_ell(4, 8);
  CHECK(f4.coeff(4) == Rational(1));
  CHECK(f4.coeff(5) == Rational(14));
  CHECK(f4.coeff(6) == Rational(158));
  CHECK(f4.coeff(7) == Rational(1676));
  CHECK(F_ell(5, 8).coeff(5) == Rational(1));

  // Coefficients count maps: non-negative integers, below the full count.
  for (int ell = 2; ell <= 5; ++ell) {
    const Series f = F_ell(ell, 8);
    for (int n = 0; n <= 8; ++n) {
      CHECK(f.coeff(n).is_integer());
      CHECK(f.coeff(n).sign() >= 0);
      CHECK(f.coeff(n) <= m_count(n));
    }
  }

  CHECK_THROWS_AS(F_ell(1, 8), UnsupportedValency);
  CHECK_THROWS_AS(F_ell(0, 8), UnsupportedValency);
}

TEST_CASE("corner-law probabilities") {
  CHECK(xi(2) == Rational(7, 108));
  CHECK(xi(4) == Rational(419, 17496));
  CHECK(xi(8) == Rational(661385, 306110016));

  // Strictly positive with the crude lower bound, out past the pinned range.
  for (int ell = 2; ell <= 16; ++ell) {
    CAPTURE(ell);
    CHECK(xi(ell).sign() == 1);
    CHECK(xi(ell) >= Rational(1, 12).pow(ell));
  }
  CHECK_THROWS_AS(xi(1), UnsupportedValency);

  // Tail decays like 2^{-ell} sqrt(ell): consecutive ratio near 1/2.
  const double ratio = (xi(41) / xi(40)).to_double();
  CHECK(ratio > 0.45);
  CHECK(ratio < 0.55);
}

TEST_CASE("root-edge configuration law") {
  CHECK(p_star(1) == Rational(1, 12));
  for (int k = 1; k <= 30; ++k) {
    CAPTURE(k);
    CHECK(p_star(k).sign() == 1);
    CHECK(p_star(k) >= Rational(1, 12).pow(k));
  }
  Rational sum(0);
  for (int k = 1; k <= 200; ++k) sum += p_star(k);
  CHECK(sum < Rational(1));
  CHECK(sum > Rational(999, 1000));
}

TEST_CASE("local pattern probability") {
  for (int ell = 2; ell <= 6; ++ell)
    CHECK(local_pattern_probability(polygon(ell)) == xi(ell));

  const CombinatorialMap quad =
      read_map_file(std::string(MAPCOUNT_DATA_DIR) + "/m8.map");
  CHECK(local_pattern_probability(quad) == xi(4) / Rational(12));

  // A root-face bridge trades a factor 12 the other way.
  const CombinatorialMap bridge = CombinatorialMap::validated({1, 0}, {0, 1}, 0);
  CHECK(local_pattern_probability(bridge) == Rational(12) * xi(2));
  CHECK(local_pattern_probability(bridge) == Rational(7, 9));

  const CombinatorialMap pfig =
      read_map_file(std::string(MAPCOUNT_DATA_DIR) + "/pfig.map");
  CHECK(local_pattern_probability(pfig) == xi(8));

  const CombinatorialMap loop = CombinatorialMap::validated({1, 0}, {1, 0}, 0);
  CHECK_THROWS_AS(local_pattern_probability(loop), UnsupportedValency);
}
