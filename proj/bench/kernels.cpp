// Serial reference vs OpenMP path for the enumeration and sampling kernels.
#include <benchmark/benchmark.h>

#include "redux/corpus.hpp"
#include "redux/hyperbolic.hpp"
#include "redux/random.hpp"
#include "redux/verifiers.hpp"

using namespace redux;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

// GF(31)^4, no common root, so the whole space is scanned.
PolySystem unsat_system() {
  Field F = Field::prime(31);
  auto l = make_layout({"x.1", "x.2", "x.3", "x.4"});
  Polynomial x1 = Polynomial::variable(F, l, 0), x2 = Polynomial::variable(F, l, 1);
  Polynomial x3 = Polynomial::variable(F, l, 2), x4 = Polynomial::variable(F, l, 3);
  Polynomial f = x1 * x2 + x3 * x4 - Polynomial::constant(F, l, 1);
  Polynomial g = x1 * x2 + x3 * x4 - Polynomial::constant(F, l, 2);
  return PolySystem(F, l, {f, g});
}

void BM_BruteForceHN(benchmark::State& state) {
  auto S = unsat_system();
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_hn(S, exec_of(state)));
}
BENCHMARK(BM_BruteForceHN)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BruteForceSparseShift(benchmark::State& state) {
  // scans all of GF(31)^3 unless a shift is found early
  Field F = Field::prime(31);
  auto l = make_layout({"x", "y", "z"});
  Polynomial s = Polynomial::variable(F, l, 0) + Polynomial::variable(F, l, 1) + Polynomial::variable(F, l, 2);
  Polynomial f = s.pow(3) + Polynomial::variable(F, l, 0).pow(2);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_sparseshift(f, exec_of(state)));
}
BENCHMARK(BM_BruteForceSparseShift)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

SampleConfig config(std::size_t count) {
  SampleConfig c;
  c.count = count;
  c.seed = 7;
  return c;
}

void BM_SampleHyperbolicity(benchmark::State& state) {
  auto rng = sample_rng(9, 0);
  auto art = hyperbolic::build_hyperbolicity(corpus::bilinear_square_sum(rng, 2, 2, 3));
  for (auto _ : state) benchmark::DoNotOptimize(sample_hyperbolicity(art.p, art.e, config(500), exec_of(state)));
}
BENCHMARK(BM_SampleHyperbolicity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SampleStability(benchmark::State& state) {
  auto rng = sample_rng(9, 1);
  auto art = hyperbolic::build_hyperbolicity(corpus::bilinear_square_sum(rng, 2, 2, 3));
  auto st = hyperbolic::build_stability(art);
  for (auto _ : state) benchmark::DoNotOptimize(sample_real_stability(st.ptilde, config(100), exec_of(state)));
}
BENCHMARK(BM_SampleStability)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SampleConvexity(benchmark::State& state) {
  auto rng = sample_rng(9, 2);
  auto n = corpus::x_names(2), m = corpus::y_names(2);
  auto art = hyperbolic::build_convexity(corpus::random_biquadratic(rng, 2, 4), n, m);
  for (auto _ : state) benchmark::DoNotOptimize(sample_convexity(art.f, config(500), exec_of(state)));
}
BENCHMARK(BM_SampleConvexity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
