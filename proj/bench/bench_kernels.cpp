// Parallel kernels against their serial triple-loop counterparts on matching inputs.

#include <benchmark/benchmark.h>

#include <random>

#include "dirstock/dst.hpp"
#include "dirstock/presets.hpp"
#include "dirstock/reference.hpp"
#include "dirstock/synthesis.hpp"

using namespace dirstock;

namespace {

CoefficientVolume random_volume(const CoefficientAxes& ax, std::uint64_t seed) {
    CoefficientVolume v(ax);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    for (auto& c : v.values) c = {nd(rng), nd(rng)};
    return v;
}

const Window1D& window() {
    static const Window1D w = presets::window();
    return w;
}

// Small enough that the triple loops finish in a few seconds.
const CoefficientAxes& small_axes() {
    static const CoefficientAxes ax = make_coefficient_axes(8, {-3, 3, 49}, {0.4, 5, 4});
    return ax;
}

void BM_inner_product_Y(benchmark::State& st) {
    const auto ax = presets::axes(32, 16);
    const auto F = random_volume(ax, 1), G = random_volume(ax, 2);
    for (auto _ : st) benchmark::DoNotOptimize(inner_product_Y(F, G));
    st.SetItemsProcessed(st.iterations() * std::int64_t(F.values.size()));
}

void BM_inner_product_Y_reference(benchmark::State& st) {
    const auto ax = presets::axes(32, 16);
    const auto F = random_volume(ax, 1), G = random_volume(ax, 2);
    for (auto _ : st) benchmark::DoNotOptimize(reference::inner_product_Y(F, G));
    st.SetItemsProcessed(st.iterations() * std::int64_t(F.values.size()));
}

void BM_synthesize(benchmark::State& st) {
    const auto Phi = random_volume(small_axes(), 3);
    const auto geom = make_grid(64, 0.125);
    for (auto _ : st) benchmark::DoNotOptimize(synthesize(Phi, window(), geom));
}

void BM_synthesize_reference(benchmark::State& st) {
    const auto Phi = random_volume(small_axes(), 3);
    const auto geom = make_grid(64, 0.125);
    for (auto _ : st) benchmark::DoNotOptimize(reference::synthesize(Phi, window(), geom));
}

void BM_dst_fourier(benchmark::State& st) {
    const auto f = presets::signal().sample(presets::geometry());
    for (auto _ : st) benchmark::DoNotOptimize(dst_fourier(f, window(), small_axes()));
}

void BM_dst_radon(benchmark::State& st) {
    const auto f = presets::signal().sample(presets::geometry());
    for (auto _ : st) benchmark::DoNotOptimize(dst_radon(f, window(), small_axes()));
}

void BM_dst_direct_reference(benchmark::State& st) {
    const auto f = presets::signal().sample(presets::geometry());
    for (auto _ : st) benchmark::DoNotOptimize(reference::dst_direct_volume(f, window(), small_axes()));
}

} // namespace

BENCHMARK(BM_inner_product_Y)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_inner_product_Y_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_synthesize)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_synthesize_reference)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_dst_fourier)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dst_radon)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dst_direct_reference)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
