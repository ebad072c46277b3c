#include <benchmark/benchmark.h>

#include "legh/analytic.hpp"
#include "legh/duppoly.hpp"
#include "legh/experiments.hpp"
#include "legh/heights.hpp"

namespace {

using Cd = std::complex<double>;

legh::LegendreFiberPoint x2_point(long k) {
  return legh::LegendreFiberPoint::affine(2, 2 * k, legh::BigRational(2 - 2 * k * k));
}

void BM_NeronTate(benchmark::State& state) {
  const auto p = x2_point(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(legh::neron_tate(p).value);
}
BENCHMARK(BM_NeronTate)->Arg(2)->Arg(20)->Arg(60);

void BM_NeronTateExact(benchmark::State& state) {
  const auto p = x2_point(2);
  legh::NeronTateOptions opts;
  opts.tolerance = 1e-4;
  opts.bit_budget = std::uint64_t{1} << 24;
  for (auto _ : state) benchmark::DoNotOptimize(legh::neron_tate_exact(p, opts).value);
}
BENCHMARK(BM_NeronTateExact);

void BM_WeierstrassP(benchmark::State& state) {
  const Cd tau(0.2, 1.1), z(0.31, 0.17);
  for (auto _ : state) benchmark::DoNotOptimize(legh::analytic::weierstrass_p(z, tau));
}
BENCHMARK(BM_WeierstrassP);

void BM_LambdaOfTauOfLambda(benchmark::State& state) {
  const Cd l(0.37, 0.12);
  for (auto _ : state) benchmark::DoNotOptimize(legh::analytic::lambda_of_tau(legh::analytic::tau_of_lambda(l)));
}
BENCHMARK(BM_LambdaOfTauOfLambda);

void BM_XiMap(benchmark::State& state) {
  const Cd l(0.45, 0.1);
  const auto w = legh::analytic::periods(l);
  const legh::analytic::TorusCoordinate xi({0.123, 0.456});
  const auto p = legh::analytic::exp_map<double>(legh::analytic::period_combination(w, xi), l);
  for (auto _ : state) benchmark::DoNotOptimize(legh::analytic::xi_map(p, l));
}
BENCHMARK(BM_XiMap);

void BM_LiftTriple(benchmark::State& state) {
  auto t = legh::triple_at_level(1);
  for (int i = 1; i < state.range(0); ++i) t = legh::lift_triple(t);
  for (auto _ : state) benchmark::DoNotOptimize(legh::lift_triple(t).g[0].term_count());
}
BENCHMARK(BM_LiftTriple)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_DupApply(benchmark::State& state) {
  const auto p = x2_point(7);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(legh::dup_apply(p, n));
}
BENCHMARK(BM_DupApply)->Arg(1)->Arg(3)->Arg(5);

void BM_SpecializationSweep(benchmark::State& state) {
  const auto family = legh::builtin_family_x2();
  const auto samples = legh::parse_samples("2..60");
  legh::ExperimentOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(legh::run_specialization_ratio(family, samples, opts).limit_estimate);
}
BENCHMARK(BM_SpecializationSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
