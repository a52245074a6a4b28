// Serial reference vs OpenMP kernels: one grid oracle solve, a verification
// batch, a 2-D paradox map and a long θ sweep.

#include <benchmark/benchmark.h>

#include "govgap/harness/sweep.hpp"
#include "govgap/harness/verify.hpp"
#include "govgap/model.hpp"
#include "govgap/oracle.hpp"

namespace {

using govgap::oracle::Execution;

Execution exec_of(const benchmark::State& s) { return s.range(0) == 0 ? Execution::Serial : Execution::Parallel; }

void BM_GridOracle(benchmark::State& state) {
    const auto p = govgap::ModelParams::make(2.0, 2.0, 1.14);
    const auto spec = govgap::oracle::GridSpec::for_params(p);
    auto f = [&](double a, double d) { return govgap::profit(a, d, p); };
    for (auto _ : state) {
        auto r = govgap::oracle::maximize_profit(f, spec, exec_of(state));
        benchmark::DoNotOptimize(r.value_hat);
    }
}
BENCHMARK(BM_GridOracle)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_VerifyBaseline(benchmark::State& state) {
    const auto pts = govgap::harness::sample_valid_set(20, govgap::harness::kDefaultSeed);
    for (auto _ : state) {
        auto r = govgap::harness::verify_baseline(pts, exec_of(state));
        benchmark::DoNotOptimize(r.data());
    }
}
BENCHMARK(BM_VerifyBaseline)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_ParadoxMap(benchmark::State& state) {
    for (auto _ : state) {
        auto m = govgap::harness::paradox_map({0.1, 5.0, 400}, {0.1, 3.0, 400}, 2.0, exec_of(state));
        benchmark::DoNotOptimize(m.alpha.data());
    }
}
BENCHMARK(BM_ParadoxMap)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_BetaSweep(benchmark::State& state) {
    const auto base = govgap::ModelParams::make(0.5, 2.0, 1.25);
    govgap::harness::SweepOptions opts;
    opts.config.beta = 1.5;
    for (auto _ : state) {
        auto r = govgap::harness::sweep(govgap::harness::SweepAxis::Theta, {0.5, 5.0, 2000}, base, opts,
                                        exec_of(state));
        benchmark::DoNotOptimize(r.points.data());
    }
}
BENCHMARK(BM_BetaSweep)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
