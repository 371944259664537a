// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "postpcp/bridge.hpp"
#include "postpcp/family.hpp"
#include "postpcp/pcp.hpp"
#include "postpcp/reductions.hpp"

using namespace postpcp;

namespace {

// Post's instance for a target whose shortest solution has 37 indices.
const PcpInstance& deep_instance() {
    static const auto inst =
        reduce_post(NormalSystem(Word("ba"), {{Word("b"), Word("ab")}, {Word("b"), Word("a")}, {Word("a"), Word("b")}}),
                    Word("aaaa"))
            .instance;
    return inst;
}

// No solution: the search exhausts every state within the bounds.
const PcpInstance& wide_instance() {
    static const PcpInstance inst({{Word("a"), Word{}},
                                   {Word("b"), Word{}},
                                   {Word{}, Word("aab")},
                                   {Word{}, Word("bba")},
                                   {Word("ab"), Word("b")}});
    return inst;
}

const std::vector<ExperimentCase>& family_cases() {
    static const auto cases = [] {
        static constexpr Letter ab[] = {Letter::a, Letter::b};
        std::vector<ExperimentCase> out;
        const auto targets = all_words(ab, 1, 4);
        for (const auto& sys : system_family(5, 40))
            for (const auto& u : targets) out.push_back({u.str(), sys, u});
        return out;
    }();
    return cases;
}

void BM_solve_deep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(solve_bounded(deep_instance(), 200, 28));
}
void BM_solve_deep_serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(serial::solve_bounded(deep_instance(), 200, 28));
}
void BM_solve_wide(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(solve_bounded(wide_instance(), 14, 12));
}
void BM_solve_wide_serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(serial::solve_bounded(wide_instance(), 14, 12));
}
void BM_experiments(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(run_experiments(family_cases(), {16, 10}, {24, 20}));
}
void BM_experiments_serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(serial::run_experiments(family_cases(), {16, 10}, {24, 20}));
}

} // namespace

BENCHMARK(BM_solve_deep)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_solve_deep_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_solve_wide)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_solve_wide_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_experiments)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_experiments_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
