#include <benchmark/benchmark.h>

#include <random>

#include "coamap/checks.hpp"
#include "coamap/render.hpp"

using namespace coamap;

namespace {

LaurentPolynomial univariate_example() { return parse_polynomial("1 + z1^3 + i*z1^5", 1); }

static void BM_LopsidedPredicateFloat(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> ad(-3.1, 3.1);
  auto f = parse_polynomial("1 + z1 + z2 + i*z1*z2 + z1^2*z2 - z1^3 + z2^3", 2);
  for (auto& t : f.terms) t.coeff.angle = Angle::radians(t.coeff.angle.rad());
  for (auto _ : state) {
    TorusPoint theta(std::vector<Angle>{Angle::radians(ad(rng)), Angle::radians(ad(rng))});
    benchmark::DoNotOptimize(in_lopsided_coamoeba(f, theta));
  }
}
BENCHMARK(BM_LopsidedPredicateFloat);

static void BM_LopsidedPredicateExact(benchmark::State& state) {
  Rng rng(2);
  auto f = random_exact_polynomial(rng, 2, 7);
  for (auto _ : state) {
    TorusPoint theta = random_exact_theta(rng, 2);
    benchmark::DoNotOptimize(in_closed_lopsided(f, theta));
  }
}
BENCHMARK(BM_LopsidedPredicateExact);

static void BM_EnumerateOrders(benchmark::State& state) {
  auto f = univariate_example();
  DualMatrix b = gale_dual(support_matrix(f));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_orders(f, b.b));
}
BENCHMARK(BM_EnumerateOrders);

static void BM_WitnessTheta(benchmark::State& state) {
  auto f = univariate_example();
  DualMatrix b = gale_dual(support_matrix(f));
  auto orders = enumerate_orders(f, b.b);
  for (auto _ : state) benchmark::DoNotOptimize(witness_theta(f, b.b, orders[2]));
}
BENCHMARK(BM_WitnessTheta);

static void BM_Hnf6x6(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-9, 9);
  IntMat m(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m(i, j) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(m));
}
BENCHMARK(BM_Hnf6x6);

static void BM_AberthDegree8(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> cd(-2.0, 2.0);
  UnivariatePoly p;
  p.coeffs.resize(9);
  for (auto& c : p.coeffs) c = {cd(rng), cd(rng)};
  p.coeffs.back() += 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(aberth_roots(p));
}
BENCHMARK(BM_AberthDegree8);

static void BM_RasterLopsided128(benchmark::State& state) {
  auto f = parse_polynomial("z1^3 + z2 + z2^2 - z1*z2", 2);
  for (auto _ : state) benchmark::DoNotOptimize(raster_lopsided(f, 128));
}
BENCHMARK(BM_RasterLopsided128);

static void BM_BasePoints(benchmark::State& state) {
  auto f = parse_polynomial("1 + z1 + z2 + e^(1/4*pi*i)*z1*z2", 2);
  for (auto _ : state) benchmark::DoNotOptimize(base_points(f));
}
BENCHMARK(BM_BasePoints);

}  // namespace

BENCHMARK_MAIN();
