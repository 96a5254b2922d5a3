// Throughput of the OpenMP kernels against their serial twins.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "holdercover/kernels.hpp"
#include "holdercover/serial.hpp"

using namespace holdercover;

namespace {

std::vector<Point2> cloud(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<Point2> pts(n);
    for (auto& p : pts) p = {u(rng), u(rng)};
    return pts;
}

std::vector<Real> params(std::size_t n) {
    std::vector<Real> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<Real>(i) / n;
    return t;
}

template <bool Parallel>
void BM_PairwisePowerRatio(benchmark::State& state) {
    const auto a = cloud(state.range(0), 1), b = cloud(state.range(0), 2);
    for (auto _ : state) {
        auto r = Parallel ? kernels::pairwise_power_ratio_sup(a, b, 1.2L) : serial::pairwise_power_ratio_sup(a, b, 1.2L);
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * (state.range(0) - 1) / 2);
}

template <bool Parallel>
void BM_KnotHolder(benchmark::State& state) {
    const auto pts = cloud(state.range(0), 3);
    const auto t = params(pts.size());
    for (auto _ : state) {
        Real r = Parallel ? kernels::knot_holder_sup(t, pts, 0.7L) : serial::knot_holder_sup(t, pts, 0.7L);
        benchmark::DoNotOptimize(r);
    }
}

template <bool Parallel>
void BM_PolylineGap(benchmark::State& state) {
    const auto pts = cloud(state.range(0), 4), line = cloud(state.range(0), 5);
    for (auto _ : state) {
        Real r = Parallel ? kernels::polyline_gap(pts, line) : serial::polyline_gap(pts, line);
        benchmark::DoNotOptimize(r);
    }
}

template <bool Parallel>
void BM_StripWidths(benchmark::State& state) {
    std::vector<std::vector<Point2>> groups;
    for (int g = 0; g < state.range(0); ++g) groups.push_back(cloud(64, 100 + g));
    for (auto _ : state) {
        auto r = Parallel ? kernels::strip_widths(groups) : serial::strip_widths(groups);
        benchmark::DoNotOptimize(r);
    }
}

template <bool Parallel>
void BM_CornerGrid(benchmark::State& state) {
    const std::vector<Real> gaps{0.6L, 0.2L, 0.07L, 0.02L, 0.006L, 0.002L, 0.0007L, 0.0002L, 0.00007L, 0.00002L};
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = Parallel ? kernels::corner_grid(gaps, depth) : serial::corner_grid(gaps, depth);
        benchmark::DoNotOptimize(r);
    }
}

}  // namespace

BENCHMARK(BM_PairwisePowerRatio<false>)->Arg(512)->Arg(2048);
BENCHMARK(BM_PairwisePowerRatio<true>)->Arg(512)->Arg(2048);
BENCHMARK(BM_KnotHolder<false>)->Arg(1024)->Arg(4096);
BENCHMARK(BM_KnotHolder<true>)->Arg(1024)->Arg(4096);
BENCHMARK(BM_PolylineGap<false>)->Arg(1024);
BENCHMARK(BM_PolylineGap<true>)->Arg(1024);
BENCHMARK(BM_StripWidths<false>)->Arg(256)->Arg(4096);
BENCHMARK(BM_StripWidths<true>)->Arg(256)->Arg(4096);
BENCHMARK(BM_CornerGrid<false>)->Arg(6)->Arg(9);
BENCHMARK(BM_CornerGrid<true>)->Arg(6)->Arg(9);

BENCHMARK_MAIN();
