#include <benchmark/benchmark.h>

#include <random>

#include "channelscope/channels.hpp"
#include "channelscope/compat.hpp"
#include "channelscope/geometry.hpp"
#include "channelscope/numerics.hpp"
#include "channelscope/oracle.hpp"
#include "channelscope/polytope.hpp"
#include "channelscope/witness.hpp"

namespace {

chs::ChannelSpec amp_damp(double l) {
    chs::ChannelSpec s;
    s.family = chs::Family::amp_damp;
    s.lambda = {l};
    return s;
}

chs::ChannelSpec depolarizing(std::size_t d, double l) {
    chs::ChannelSpec s;
    s.family = chs::Family::depolarizing;
    s.d = d;
    s.lambda = {l};
    return s;
}

void BM_herm_eig(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    chs::CMat m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = g(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = chs::cplx(g(rng), g(rng));
            m(j, i) = std::conj(m(i, j));
        }
    }
    for (auto _ : state) benchmark::DoNotOptimize(chs::herm_eig(m));
}
BENCHMARK(BM_herm_eig)->Arg(4)->Arg(9)->Arg(16);

void BM_qubit_threshold(benchmark::State& state) {
    const auto can = chs::canonicalize_d2(chs::to_affine(amp_damp(0.36)));
    double omega = -1.0;
    for (auto _ : state) {
        omega = omega >= 1.0 ? -1.0 : omega + 1e-3;
        benchmark::DoNotOptimize(
            chs::qubit_threshold(can, {chs::Witness::Sign::plus, omega}));
    }
}
BENCHMARK(BM_qubit_threshold);

void BM_check_membership(benchmark::State& state) {
    const auto spec = depolarizing(3, 0.5);
    const chs::Correlation p(2, 2, {0.7, 0.3, 0.45, 0.55});
    for (auto _ : state) benchmark::DoNotOptimize(chs::check_membership(spec, p));
}
BENCHMARK(BM_check_membership);

void BM_numeric_threshold(benchmark::State& state) {
    const auto spec = depolarizing(2, 0.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            chs::numeric_threshold(spec, {chs::Witness::Sign::plus, 0.3}, 2, 11));
}
BENCHMARK(BM_numeric_threshold);

void BM_hull_membership(benchmark::State& state) {
    const auto vs = chs::fw_vertices(3, 3, 2);
    chs::Correlation p(3, 3, {0.5, 0.3, 0.2, 0.2, 0.5, 0.3, 0.3, 0.2, 0.5});
    for (auto _ : state) benchmark::DoNotOptimize(chs::hull_membership(vs, p));
}
BENCHMARK(BM_hull_membership);

void BM_region_boundary_custom(benchmark::State& state) {
    chs::ChannelSpec s = amp_damp(0.36);
    chs::ChannelSpec custom;
    custom.family = chs::Family::custom_kraus;
    custom.kraus = chs::build_kraus(s);
    for (auto _ : state)
        benchmark::DoNotOptimize(chs::region_boundary(custom, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_region_boundary_custom)->Arg(50)->Arg(100);

void BM_sample_correlations(benchmark::State& state) {
    const auto spec = depolarizing(3, 0.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            chs::sample_correlations(spec, 1000, 3, chs::SampleMode::random));
}
BENCHMARK(BM_sample_correlations);

}  // namespace

BENCHMARK_MAIN();
