#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "mapcount/counting.hpp"
#include "mapcount/map.hpp"
#include "mapcount/occurrence.hpp"
#include "mapcount/oracle.hpp"
#include "mapcount/rational.hpp"
#include "mapcount/series.hpp"
#include "mapcount/singular.hpp"

using namespace mapcount;

namespace {

Series random_series(int order, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-99, 99);
  std::uniform_int_distribution<int> den(1, 30);
  Series s(order);
  for (int i = 0; i <= order; ++i) s.set_coeff(i, Rational(num(rng), den(rng)));
  return s;
}

CombinatorialMap quad_with_diagonal() {
  // Quadrilateral with one diagonal, rooted on the outer face.
  return CombinatorialMap::validated({1, 0, 3, 2, 5, 4, 7, 6, 9, 8},
                                     {8, 2, 1, 4, 9, 6, 5, 0, 7, 3}, 0);
}

void series_multiply(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const Series a = random_series(order, 1);
  const Series b = random_series(order, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(series_multiply)->Arg(32)->Arg(128);

void series_sqrt(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  Series base(order);
  base.set_coeff(0, Rational(1));
  base.set_coeff(1, Rational(-12));
  for (auto _ : state) benchmark::DoNotOptimize(sqrt_series(base));
}
BENCHMARK(series_sqrt)->Arg(32)->Arg(128);

void map_series(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(m_series(order));
}
BENCHMARK(map_series)->Arg(30)->Arg(100);

void bivariate_series(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(M_bivariate(order));
}
BENCHMARK(bivariate_series)->Arg(8)->Arg(12);

void polygon_series(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(F_ell(4, 16));
}
BENCHMARK(polygon_series);

void marked_pattern_series(benchmark::State& state) {
  const CombinatorialMap m = quad_with_diagonal();
  const PatternDescriptor d = m.descriptor();
  for (auto _ : state) benchmark::DoNotOptimize(T_pattern(d, 20));
}
BENCHMARK(marked_pattern_series);

void submap_expansion(benchmark::State& state) {
  const CombinatorialMap m = quad_with_diagonal();
  const PatternDescriptor d = m.descriptor();
  for (auto _ : state) benchmark::DoNotOptimize(singular_S(d, 5));
}
BENCHMARK(submap_expansion);

void canonical_code(benchmark::State& state) {
  const CombinatorialMap m = quad_with_diagonal();
  for (auto _ : state) benchmark::DoNotOptimize(m.canonical_code());
}
BENCHMARK(canonical_code);

void enumerate_small(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(detail::enumerate_uncached(n));
}
BENCHMARK(enumerate_small)->Arg(3)->Arg(4);

void oracle_marked_patterns(benchmark::State& state) {
  const CombinatorialMap m = quad_with_diagonal();
  enumerate_maps(5);  // warm the enumeration cache; time only the matching
  for (auto _ : state)
    benchmark::DoNotOptimize(count_marked_patterns(m, 5));
}
BENCHMARK(oracle_marked_patterns);

}  // namespace

BENCHMARK_MAIN();
