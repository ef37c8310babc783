#include <benchmark/benchmark.h>

#include "hikita/gelfand_graev.hpp"
#include "hikita/groebner.hpp"
#include "hikita/hikita_ring.hpp"
#include "hikita/matrix.hpp"
#include "hikita/poly_io.hpp"
#include "hikita/random.hpp"
#include "hikita/rep_geometry.hpp"

using namespace hikita;

static void BM_PolynomialMultiply(benchmark::State& state) {
  const Ring r = make_ring({"x1", "x2", "x3", "x4"});
  const Polynomial a = parse_polynomial("x1 + x2 + x3 + x4 + 1", r).pow(static_cast<unsigned>(state.range(0)));
  const Polynomial b = parse_polynomial("x1 - 2*x2 + 3*x3 - x4 + 5", r).pow(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolynomialMultiply)->Arg(3)->Arg(5)->Arg(7);

static void BM_HikitaBasis(benchmark::State& state) {
  const Ideal ideal = hikita_ideal(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(ideal));
}
BENCHMARK(BM_HikitaBasis)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_BareissDet(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.rational(100, 30);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_BareissDet)->Arg(8)->Arg(16)->Arg(32);

static void BM_PolynomialGcd(benchmark::State& state) {
  const Ring r = make_ring({"x1", "x2", "x3"});
  const Polynomial g = parse_polynomial("x1^2*x2 - 3*x3 + x2^3 - 1", r);
  const Polynomial a = g * parse_polynomial("x1*x3 + x2^2 + 7", r);
  const Polynomial b = g * parse_polynomial("x1^3 - x2*x3 + 2", r);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolynomialGcd);

static void BM_LongestElement(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const Ring r = gg_ring(n);
  const GGPoint seed = symbolic_seed(r, n);
  for (auto _ : state) benchmark::DoNotOptimize(apply_word(seed, longest_word(n)));
}
BENCHMARK(BM_LongestElement)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_KeyStabilityClosure(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  Rng rng(2);
  QMatrix m(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (rng.chance(1, 3)) m(i, j) = 1;
  for (auto _ : state) benchmark::DoNotOptimize(key_stability_closure(m));
}
BENCHMARK(BM_KeyStabilityClosure)->Arg(8)->Arg(16);
BENCHMARK_MAIN();
