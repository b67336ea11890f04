// Copyright 2026 The qphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts. Each kernel is
// registered twice under the same arguments so the two rows line up:
//   qphase_bench --benchmark_filter=wigner_block

#include <benchmark/benchmark.h>

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cmath>

#include "qphase/kernels.hpp"
#include "qphase/rng.hpp"
#include "qphase/stdmap.hpp"

namespace {

using namespace qphase;

std::vector<cplx> random_vector(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<cplx> v(n);
    for (auto &x : v) x = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    return v;
}

Grid2D<double> random_grid(std::size_t side, std::uint64_t seed) {
    Rng rng(seed);
    Grid2D<double> g(side, side);
    for (double &v : g.data()) v = rng.uniform(-1.0, 1.0);
    return g;
}

void annotate(benchmark::State &state) { state.counters["threads"] = omp_get_max_threads(); }

// Size argument is log2 of the total length; blocks are sqrt-sized as in the
// modified Husimi function.
template <bool Serial>
void bm_block_dft(benchmark::State &state) {
    const std::size_t n = std::size_t{1} << state.range(0);
    const std::size_t block = std::size_t{1} << (state.range(0) / 2);
    auto data = random_vector(n, 1);
    for (auto _ : state) {
        if constexpr (Serial) {
            kernels::serial::block_dft(data, block, Direction::forward);
        } else {
            kernels::block_dft(data, block, Direction::forward);
        }
        benchmark::DoNotOptimize(data.data());
    }
    annotate(state);
}

template <bool Serial>
void bm_wigner_block(benchmark::State &state) {
    const std::size_t n = std::size_t{1} << state.range(0);
    const auto psi = random_vector(n, 2);
    Grid2D<double> block(2 * n, n);
    for (auto _ : state) {
        const double r = Serial ? kernels::serial::wigner_block(psi, block) : kernels::wigner_block(psi, block);
        benchmark::DoNotOptimize(r);
    }
    annotate(state);
}

template <bool Serial>
void bm_d4_square(benchmark::State &state) {
    const std::size_t side = std::size_t{1} << state.range(0);
    const int levels = static_cast<int>(state.range(0)) - 2;
    auto g = random_grid(side, 3);
    for (auto _ : state) {
        if constexpr (Serial) {
            kernels::serial::d4_square(g, 0, 0, side, levels, false);
        } else {
            kernels::d4_square(g, 0, 0, side, levels, false);
        }
        benchmark::DoNotOptimize(g.data().data());
    }
    annotate(state);
}

template <bool Serial>
void bm_d4_tiles(benchmark::State &state) {
    const std::size_t side = std::size_t{1} << state.range(0);
    const std::size_t tile = std::size_t{1} << std::max<int>(2, static_cast<int>(state.range(0) + 1) / 2);
    const int levels = std::max(1, static_cast<int>(std::countr_zero(tile)) - 2);
    auto g = random_grid(side, 4);
    for (auto _ : state) {
        if constexpr (Serial) {
            kernels::serial::d4_tiles(g, tile, levels, false);
        } else {
            kernels::d4_tiles(g, tile, levels, false);
        }
        benchmark::DoNotOptimize(g.data().data());
    }
    annotate(state);
}

template <bool Serial>
void bm_standard_map_step(benchmark::State &state) {
    auto ensemble = band_ensemble(2.0, static_cast<std::size_t>(state.range(0)), 5);
    for (auto _ : state) {
        if constexpr (Serial) {
            kernels::serial::standard_map_step(ensemble.points, 2.0);
        } else {
            kernels::standard_map_step(ensemble.points, 2.0);
        }
        benchmark::DoNotOptimize(ensemble.points.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
    annotate(state);
}

template <bool Serial>
void bm_gaussian_overlaps(benchmark::State &state) {
    const std::size_t n = std::size_t{1} << state.range(0);
    const auto psi = random_vector(n, 6);
    const std::size_t side = std::size_t{1} << (state.range(0) / 2);
    std::vector<double> theta0, n0;
    for (std::size_t i = 0; i < side; ++i) {
        for (std::size_t j = 0; j < side; ++j) {
            theta0.push_back(6.283185307179586 * static_cast<double>(i) / static_cast<double>(side));
            n0.push_back(static_cast<double>(j * n / side));
        }
    }
    std::vector<double> out(theta0.size());
    const double a = std::sqrt(static_cast<double>(n) / (4.0 * 3.141592653589793));
    for (auto _ : state) {
        if constexpr (Serial) {
            kernels::serial::gaussian_overlaps(psi, theta0, n0, a, out);
        } else {
            kernels::gaussian_overlaps(psi, theta0, n0, a, out);
        }
        benchmark::DoNotOptimize(out.data());
    }
    annotate(state);
}

}  // namespace

BENCHMARK(bm_block_dft<true>)->Name("block_dft/serial")->DenseRange(8, 16, 4);
BENCHMARK(bm_block_dft<false>)->Name("block_dft/omp")->DenseRange(8, 16, 4);
// The direct O(N^3) reference takes tens of seconds at 2^10.
BENCHMARK(bm_wigner_block<true>)->Name("wigner_block/serial")->DenseRange(6, 8, 2);
BENCHMARK(bm_wigner_block<false>)->Name("wigner_block/omp")->DenseRange(6, 10, 2);
BENCHMARK(bm_d4_square<true>)->Name("d4_square/serial")->DenseRange(6, 10, 2);
BENCHMARK(bm_d4_square<false>)->Name("d4_square/omp")->DenseRange(6, 10, 2);
BENCHMARK(bm_d4_tiles<true>)->Name("d4_tiles/serial")->DenseRange(6, 10, 2);
BENCHMARK(bm_d4_tiles<false>)->Name("d4_tiles/omp")->DenseRange(6, 10, 2);
BENCHMARK(bm_standard_map_step<true>)->Name("standard_map_step/serial")->Range(1 << 12, 1 << 20);
BENCHMARK(bm_standard_map_step<false>)->Name("standard_map_step/omp")->Range(1 << 12, 1 << 20);
BENCHMARK(bm_gaussian_overlaps<true>)->Name("gaussian_overlaps/serial")->DenseRange(6, 10, 2);
BENCHMARK(bm_gaussian_overlaps<false>)->Name("gaussian_overlaps/omp")->DenseRange(6, 10, 2);

BENCHMARK_MAIN();
