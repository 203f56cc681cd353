#include <benchmark/benchmark.h>

#include "tracecodes/charsums.hpp"
#include "tracecodes/codes.hpp"
#include "tracecodes/report.hpp"

using namespace tracecodes;

static void BM_BuildTower(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        FieldTower t = FieldTower::build(3, m, 1, 1);
        benchmark::DoNotOptimize(t.alpha());
    }
}
BENCHMARK(BM_BuildTower)->Arg(4)->Arg(6)->Arg(8);

static void BM_WeightEnumeration(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const FieldTower t = FieldTower::build(3, m, 2, 1);
    const LinearCode code = build_code(t);
    for (auto _ : state) {
        auto wd = weight_distribution_bruteforce(code);
        benchmark::DoNotOptimize(wd.counts.size());
    }
    state.SetComplexityN(static_cast<std::int64_t>(t.order()));
}
BENCHMARK(BM_WeightEnumeration)->Arg(6)->Arg(8)->Complexity();

static void BM_OmegaBrute(benchmark::State& state) {
    const FieldTower t = FieldTower::build(3, 6, 2, 1);
    Elem b = t.alpha();
    for (auto _ : state) {
        auto v = omega(t, b, 1, Mode::brute);
        benchmark::DoNotOptimize(v.coeffs().data());
    }
}
BENCHMARK(BM_OmegaBrute);

static void BM_OmegaClosed(benchmark::State& state) {
    const FieldTower t = FieldTower::build(3, 6, 2, 1);
    Elem b = t.alpha();
    for (auto _ : state) {
        auto v = omega(t, b, 1, Mode::closed);
        benchmark::DoNotOptimize(v.coeffs().data());
    }
}
BENCHMARK(BM_OmegaClosed);

static void BM_Report(benchmark::State& state) {
    for (auto _ : state) {
        ReportOptions opt;
        opt.lemma_checks = false;
        Report r = make_report(3, 6, 2, 1, opt);
        benchmark::DoNotOptimize(r.d);
    }
}
BENCHMARK(BM_Report);

BENCHMARK_MAIN();
