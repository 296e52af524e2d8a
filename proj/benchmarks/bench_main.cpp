#include "tagtrends/classify.hpp"
#include "tagtrends/durations.hpp"
#include "tagtrends/rng.hpp"
#include "tagtrends/scores.hpp"
#include "tagtrends/spca.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

using namespace tagtrends;

namespace {

std::vector<double> random_proportions(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> p(n);
    for (auto& v : p)
        v = 0.01 + 0.3 * rng.real();
    return p;
}

TrendSeries random_series(std::uint64_t seed) {
    TrendSeries s;
    s.tag = "bench";
    Rng rng(seed);
    for (int y = 2012; y <= 2024; ++y)
        s.years.push_back(y);
    s.f.assign(13, 0.0);
    s.f_hp.assign(13, 0.0);
    s.recent_offset = 5;
    s.f_c.resize(8);
    for (auto& v : s.f_c)
        v = rng.normal() * 0.3;
    return s;
}

ScoreMatrix random_rows(int n, std::uint64_t seed) {
    Rng rng(seed);
    ScoreMatrix rows(n);
    for (auto& r : rows) {
        const double base = rng.normal();
        for (auto& v : r)
            v = base + 0.5 * rng.normal();
    }
    return rows;
}

void BM_RecentTrend(benchmark::State& state) {
    auto p = random_proportions(static_cast<int>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(recent_trend(p, 5));
}
BENCHMARK(BM_RecentTrend)->Arg(13)->Arg(130)->Arg(1300);

void BM_GeneralTrend(benchmark::State& state) {
    auto p = random_proportions(static_cast<int>(state.range(0)), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(general_trend(p));
}
BENCHMARK(BM_GeneralTrend)->Arg(13)->Arg(1300);

void BM_PermutationNull(benchmark::State& state) {
    std::vector<TrendSeries> all;
    for (int i = 0; i < 100; ++i)
        all.push_back(random_series(100 + i));
    const int resamples = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(null_model_histogram(all, resamples, 7));
}
BENCHMARK(BM_PermutationNull)->Arg(100)->Arg(1000);

void BM_SparsePcaLadder(benchmark::State& state) {
    auto rows = random_rows(static_cast<int>(state.range(0)), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(sparse_pca_ladder(rows, 3));
}
BENCHMARK(BM_SparsePcaLadder)->Arg(1000)->Arg(10000);

void BM_FitDecay(benchmark::State& state) {
    std::vector<double> post_peak;
    for (int t = 0; t < 8; ++t)
        post_peak.push_back(0.2 * std::exp(-0.4 * t));
    for (auto _ : state)
        benchmark::DoNotOptimize(fit_decay(post_peak));
}
BENCHMARK(BM_FitDecay);

} // namespace

BENCHMARK_MAIN();
