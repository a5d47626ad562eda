#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "bandedge/bandedge.hpp"

using namespace bandedge;

namespace {

const SpecialReservoir kReservoir(0.8, 1.0, 0.5);

void BM_Erfcx(benchmark::State& state) {
  // Spread over the series, continued-fraction and asymptotic regions.
  std::vector<Complex> args;
  for (int i = 0; i < 64; ++i) args.push_back(std::polar(0.05 * std::pow(1.15, i), 0.1 * i));
  for (auto _ : state)
    for (Complex z : args) benchmark::DoNotOptimize(specfun::erfcx(z));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(args.size()));
}
BENCHMARK(BM_Erfcx);

void BM_SolveQuartic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_quartic(kReservoir));
}
BENCHMARK(BM_SolveQuartic);

void BM_Propagator(benchmark::State& state) {
  const auto sol = solve_quartic(kReservoir);
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(propagator(sol, t));
}
BENCHMARK(BM_Propagator)->Arg(1)->Arg(10)->Arg(100);

void BM_CorrelationFunction(benchmark::State& state) {
  const double tau = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(correlation_function(kReservoir, tau, 1e-10));
}
BENCHMARK(BM_CorrelationFunction)->Arg(0)->Arg(1)->Arg(20);

void BM_LaplaceInvert(benchmark::State& state) {
  const auto sol = solve_quartic(kReservoir);
  oracle::InversionConfig cfg;
  for (const auto& p : pole_terms(sol)) cfg.max_frequency = std::max(cfg.max_frequency, std::abs(p.rate.imag()));
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        oracle::laplace_invert([](Complex u) { return laplace_propagator_closed_form(kReservoir, u); }, t, cfg));
  }
}
BENCHMARK(BM_LaplaceInvert)->Arg(1)->Arg(10);

void BM_VolterraSpecial(benchmark::State& state) {
  oracle::VolterraConfig cfg;
  cfg.horizon = 5.0;
  cfg.step = cfg.horizon / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::volterra_solve(oracle::special_kernel(kReservoir), cfg));
}
BENCHMARK(BM_VolterraSpecial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
