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

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qphase/kernels.hpp"
#include "qphase/stdmap.hpp"

namespace qphase::kernels {
namespace {

using std::ptrdiff_t;

void d4_level_impl(double *x, std::size_t stride, std::size_t length, bool inverse,
                   double *scratch) {
    const auto &f = detail::d4_filter();
    const std::size_t half = length / 2;
    const std::size_t mask = length - 1;
    if (!inverse) {
        for (std::size_t k = 0; k < half; ++k) {
            double a = 0.0;
            double d = 0.0;
            for (std::size_t i = 0; i < 4; ++i) {
                const double v = x[((2 * k + i) & mask) * stride];
                a += f.h[i] * v;
                d += f.g[i] * v;
            }
            scratch[k] = a;
            scratch[half + k] = d;
        }
    } else {
        std::fill(scratch, scratch + length, 0.0);
        for (std::size_t k = 0; k < half; ++k) {
            const double a = x[k * stride];
            const double d = x[(half + k) * stride];
            for (std::size_t i = 0; i < 4; ++i) {
                scratch[(2 * k + i) & mask] += f.h[i] * a + f.g[i] * d;
            }
        }
    }
    for (std::size_t i = 0; i < length; ++i) x[i * stride] = scratch[i];
}

// Single-threaded square transform, shared by the tile kernel.
void d4_square_sequential(Grid2D<double> &g, std::size_t row0, std::size_t col0,
                          std::size_t side, int levels, bool inverse, std::vector<double> &scratch) {
    scratch.resize(side);
    const std::size_t cols = g.cols();
    double *base = g.data().data() + row0 * cols + col0;
    auto pass = [&](std::size_t s) {
        if (!inverse) {
            for (std::size_t r = 0; r < s; ++r) d4_level_impl(base + r * cols, 1, s, false, scratch.data());
            for (std::size_t c = 0; c < s; ++c) d4_level_impl(base + c, cols, s, false, scratch.data());
        } else {
            for (std::size_t c = 0; c < s; ++c) d4_level_impl(base + c, cols, s, true, scratch.data());
            for (std::size_t r = 0; r < s; ++r) d4_level_impl(base + r * cols, 1, s, true, scratch.data());
        }
    };
    if (!inverse) {
        for (int lev = 0, s = static_cast<int>(side); lev < levels; ++lev, s /= 2) pass(s);
    } else {
        for (int lev = levels - 1; lev >= 0; --lev) pass(side >> lev);
    }
}

}  // namespace

void block_dft(std::span<cplx> data, std::size_t block, Direction direction) {
    const ptrdiff_t blocks = static_cast<ptrdiff_t>(data.size() / block);
    const double scale = 1.0 / std::sqrt(static_cast<double>(block));
#pragma omp parallel for schedule(static) if (blocks > 1)
    for (ptrdiff_t b = 0; b < blocks; ++b) {
        cplx *p = data.data() + static_cast<std::size_t>(b) * block;
        detail::fft_inplace(p, block, direction);
        for (std::size_t i = 0; i < block; ++i) p[i] *= scale;
    }
}

void dft_unnormalized(std::span<cplx> data, Direction direction) {
    detail::fft_inplace(data.data(), data.size(), direction);
}

void multiply_phases(std::span<cplx> data, std::span<const cplx> phases) {
    const ptrdiff_t n = static_cast<ptrdiff_t>(data.size());
    const std::size_t period = phases.size();
#pragma omp parallel for schedule(static) if (n > 4096)
    for (ptrdiff_t i = 0; i < n; ++i) data[i] *= phases[static_cast<std::size_t>(i) % period];
}

double wigner_block(std::span<const cplx> psi, Grid2D<double> &block) {
    const std::size_t N = psi.size();
    block = Grid2D<double>(2 * N, N);
    const double scale = 1.0 / (2.0 * static_cast<double>(N));
    double residue = 0.0;
#pragma omp parallel
    {
        std::vector<cplx> f(N);
#pragma omp for schedule(static) reduction(max : residue)
        for (ptrdiff_t th = 0; th < static_cast<ptrdiff_t>(2 * N); ++th) {
            const std::size_t theta = static_cast<std::size_t>(th);
            std::fill(f.begin(), f.end(), cplx{});
            const std::size_t lo = theta >= N ? theta - (N - 1) : 0;
            const std::size_t hi = std::min(theta, N - 1);
            for (std::size_t m = lo; m <= hi; ++m) f[m] = std::conj(psi[theta - m]) * psi[m];
            detail::fft_inplace(f.data(), N, Direction::forward);
            for (std::size_t n = 0; n < N; ++n) {
                const cplx w = f[n] * detail::exp_i_pi_ratio(static_cast<long long>(n * theta),
                                                             static_cast<long long>(N)) * scale;
                block(theta, n) = w.real();
                residue = std::max(residue, std::abs(w.imag()));
            }
        }
    }
    return residue;
}

void d4_level(std::span<double> x, std::size_t length, bool inverse, std::span<double> scratch) {
    d4_level_impl(x.data(), 1, length, inverse, scratch.data());
}

void d4_square(Grid2D<double> &g, std::size_t row0, std::size_t col0, std::size_t side,
               int levels, bool inverse) {
    const std::size_t cols = g.cols();
    double *base = g.data().data() + row0 * cols + col0;
    auto pass = [&](std::size_t s) {
        const ptrdiff_t count = static_cast<ptrdiff_t>(s);
        auto rows = [&] {
#pragma omp parallel
            {
                std::vector<double> scratch(s);
#pragma omp for schedule(static)
                for (ptrdiff_t r = 0; r < count; ++r)
                    d4_level_impl(base + static_cast<std::size_t>(r) * cols, 1, s, inverse, scratch.data());
            }
        };
        auto columns = [&] {
#pragma omp parallel
            {
                std::vector<double> scratch(s);
#pragma omp for schedule(static)
                for (ptrdiff_t c = 0; c < count; ++c)
                    d4_level_impl(base + c, cols, s, inverse, scratch.data());
            }
        };
        if (!inverse) {
            rows();
            columns();
        } else {
            columns();
            rows();
        }
    };
    if (!inverse) {
        for (int lev = 0; lev < levels; ++lev) pass(side >> lev);
    } else {
        for (int lev = levels - 1; lev >= 0; --lev) pass(side >> lev);
    }
}

void d4_tiles(Grid2D<double> &g, std::size_t tile, int levels, bool inverse) {
    const std::size_t tiles_per_row = g.cols() / tile;
    const ptrdiff_t count = static_cast<ptrdiff_t>((g.rows() / tile) * tiles_per_row);
#pragma omp parallel
    {
        std::vector<double> scratch;
#pragma omp for schedule(static)
        for (ptrdiff_t t = 0; t < count; ++t) {
            const std::size_t tr = static_cast<std::size_t>(t) / tiles_per_row;
            const std::size_t tc = static_cast<std::size_t>(t) % tiles_per_row;
            d4_square_sequential(g, tr * tile, tc * tile, tile, levels, inverse, scratch);
        }
    }
}

void standard_map_step(std::span<PhasePoint> points, double K) {
    const ptrdiff_t n = static_cast<ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static) if (n > 1024)
    for (ptrdiff_t i = 0; i < n; ++i) advance(points[static_cast<std::size_t>(i)], K);
}

void gaussian_overlaps(std::span<const cplx> psi, std::span<const double> theta0,
                       std::span<const double> n0, double a, std::span<double> out) {
    const std::size_t N = psi.size();
    const ptrdiff_t centers = static_cast<ptrdiff_t>(out.size());
    const double inv4a2 = 1.0 / (4.0 * a * a);
    const long images = static_cast<long>(std::ceil(12.0 * a / static_cast<double>(N))) + 1;
#pragma omp parallel
    {
        std::vector<double> envelope(N);
#pragma omp for schedule(dynamic, 16)
        for (ptrdiff_t c = 0; c < centers; ++c) {
            double norm2 = 0.0;
            for (std::size_t n = 0; n < N; ++n) {
                double e = 0.0;
                for (long k = -images; k <= images; ++k) {
                    const double d = static_cast<double>(n) - n0[c] + static_cast<double>(k * static_cast<long>(N));
                    e += std::exp(-d * d * inv4a2);
                }
                envelope[n] = e;
                norm2 += e * e;
            }
            cplx acc{};
            for (std::size_t n = 0; n < N; ++n) {
                acc += envelope[n] * std::polar(1.0, theta0[c] * static_cast<double>(n)) * psi[n];
            }
            out[c] = std::norm(acc) / norm2;
        }
    }
}

}  // namespace qphase::kernels
