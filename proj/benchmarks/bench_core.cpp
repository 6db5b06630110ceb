#include <benchmark/benchmark.h>

#include "wiretap/covert.hpp"
#include "wiretap/detection.hpp"
#include "wiretap/experiment.hpp"
#include "wiretap/oracle.hpp"
#include "wiretap/secrecy.hpp"

namespace {

const wiretap::Scenario kScenario =
    wiretap::experiment::table1_preset().scenario;

void BM_ErrorSum(benchmark::State& state) {
    const wiretap::PowerSplit p{0.3};
    const double theta = wiretap::detection::optimal_threshold(kScenario, p);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            wiretap::detection::error_sum(kScenario, p, theta));
}
BENCHMARK(BM_ErrorSum);

void BM_SecrecyLowerBound(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            wiretap::secrecy::secrecy_lower_bound(kScenario, {0.5}));
}
BENCHMARK(BM_SecrecyLowerBound);

void BM_ScaOptimize(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(wiretap::secrecy::sca_optimize(kScenario, {}));
}
BENCHMARK(BM_ScaOptimize);

void BM_CovertOptimize(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            wiretap::covert::covert_optimize(kScenario, {0.1, 1e-9, 1000}));
}
BENCHMARK(BM_CovertOptimize);

void BM_ErgodicSecrecyMc(benchmark::State& state) {
    const auto trials = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(wiretap::secrecy::ergodic_secrecy_rate_mc(
            kScenario, {0.5}, trials, 1));
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(trials));
}
BENCHMARK(BM_ErgodicSecrecyMc)->Arg(1000)->Arg(10000);

void BM_FiniteNDetector(benchmark::State& state) {
    const wiretap::PowerSplit p{0.3};
    const double theta = wiretap::detection::optimal_threshold(kScenario, p);
    for (auto _ : state)
        benchmark::DoNotOptimize(wiretap::oracle::finite_n_detector_sim(
            kScenario, p, theta, 10000, 1000, 1));
}
BENCHMARK(BM_FiniteNDetector);

}  // namespace

BENCHMARK_MAIN();
