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

// Reference implementations: single-threaded, direct sums, no FFT.

#include <cmath>
#include <numbers>
#include <vector>

#include "qphase/kernels.hpp"
#include "qphase/stdmap.hpp"

namespace qphase::kernels::serial {
namespace {

// e^{sign * 2 pi i k / n}, k reduced modulo n.
cplx twiddle(std::size_t k, std::size_t n, Direction direction) {
    const long long sign = direction == Direction::forward ? -1 : 1;
    return detail::exp_i_pi_ratio(sign * 2 * static_cast<long long>(k % n), static_cast<long long>(n));
}

void level_forward(std::vector<double> &x) {
    const auto &f = detail::d4_filter();
    const std::size_t L = x.size();
    std::vector<double> out(L);
    for (std::size_t k = 0; k < L / 2; ++k) {
        for (std::size_t i = 0; i < 4; ++i) {
            out[k] += f.h[i] * x[(2 * k + i) % L];
            out[L / 2 + k] += f.g[i] * x[(2 * k + i) % L];
        }
    }
    x = out;
}

void level_inverse(std::vector<double> &x) {
    const auto &f = detail::d4_filter();
    const std::size_t L = x.size();
    std::vector<double> out(L);
    for (std::size_t k = 0; k < L / 2; ++k) {
        for (std::size_t i = 0; i < 4; ++i) {
            out[(2 * k + i) % L] += f.h[i] * x[k] + f.g[i] * x[L / 2 + k];
        }
    }
    x = out;
}

void square_level(Grid2D<double> &g, std::size_t row0, std::size_t col0, std::size_t s,
                  bool inverse) {
    std::vector<double> line(s);
    auto do_rows = [&] {
        for (std::size_t r = 0; r < s; ++r) {
            for (std::size_t c = 0; c < s; ++c) line[c] = g(row0 + r, col0 + c);
            inverse ? level_inverse(line) : level_forward(line);
            for (std::size_t c = 0; c < s; ++c) g(row0 + r, col0 + c) = line[c];
        }
    };
    auto do_cols = [&] {
        for (std::size_t c = 0; c < s; ++c) {
            for (std::size_t r = 0; r < s; ++r) line[r] = g(row0 + r, col0 + c);
            inverse ? level_inverse(line) : level_forward(line);
            for (std::size_t r = 0; r < s; ++r) g(row0 + r, col0 + c) = line[r];
        }
    };
    if (!inverse) {
        do_rows();
        do_cols();
    } else {
        do_cols();
        do_rows();
    }
}

}  // namespace

void dft_unnormalized(std::span<cplx> data, Direction direction) {
    const std::size_t n = data.size();
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) out[k] += twiddle(k * j, n, direction) * data[j];
    }
    std::copy(out.begin(), out.end(), data.begin());
}

void block_dft(std::span<cplx> data, std::size_t block, Direction direction) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(block));
    for (std::size_t start = 0; start < data.size(); start += block) {
        auto sub = data.subspan(start, block);
        dft_unnormalized(sub, direction);
        for (auto &v : sub) v *= scale;
    }
}

void multiply_phases(std::span<cplx> data, std::span<const cplx> phases) {
    for (std::size_t i = 0; i < data.size(); ++i) data[i] *= phases[i % phases.size()];
}

double wigner_block(std::span<const cplx> psi, Grid2D<double> &block) {
    const std::size_t N = psi.size();
    const long long n_ll = static_cast<long long>(N);
    block = Grid2D<double>(2 * N, N);
    double residue = 0.0;
    for (std::size_t theta = 0; theta < 2 * N; ++theta) {
        for (std::size_t n = 0; n < N; ++n) {
            cplx sum{};
            for (std::size_t m = 0; m < N; ++m) {
                if (theta < m || theta - m >= N) continue;
                // e^{-2 pi i n (m - Theta/2) / N} = e^{-i pi n (2m - Theta) / N}
                const long long k = -static_cast<long long>(n) *
                                    (2 * static_cast<long long>(m) - static_cast<long long>(theta));
                sum += detail::exp_i_pi_ratio(k, n_ll) * std::conj(psi[theta - m]) * psi[m];
            }
            sum /= 2.0 * static_cast<double>(N);
            block(theta, n) = sum.real();
            residue = std::max(residue, std::abs(sum.imag()));
        }
    }
    return residue;
}

void d4_square(Grid2D<double> &g, std::size_t row0, std::size_t col0, std::size_t side,
               int levels, bool inverse) {
    if (!inverse) {
        for (int lev = 0; lev < levels; ++lev) square_level(g, row0, col0, side >> lev, false);
    } else {
        for (int lev = levels - 1; lev >= 0; --lev) square_level(g, row0, col0, side >> lev, true);
    }
}

void d4_tiles(Grid2D<double> &g, std::size_t tile, int levels, bool inverse) {
    for (std::size_t r = 0; r < g.rows(); r += tile) {
        for (std::size_t c = 0; c < g.cols(); c += tile) d4_square(g, r, c, tile, levels, inverse);
    }
}

void standard_map_step(std::span<PhasePoint> points, double K) {
    for (auto &p : points) advance(p, K);
}

void gaussian_overlaps(std::span<const cplx> psi, std::span<const double> theta0,
                       std::span<const double> n0, double a, std::span<double> out) {
    const std::size_t N = psi.size();
    const long images = static_cast<long>(std::ceil(12.0 * a / static_cast<double>(N))) + 1;
    for (std::size_t c = 0; c < out.size(); ++c) {
        std::vector<cplx> phi(N);
        double norm2 = 0.0;
        for (std::size_t n = 0; n < N; ++n) {
            double e = 0.0;
            for (long k = -images; k <= images; ++k) {
                const double d = static_cast<double>(n) - n0[c] + static_cast<double>(k * static_cast<long>(N));
                e += std::exp(-d * d / (4.0 * a * a));
            }
            phi[n] = e * std::polar(1.0, -theta0[c] * static_cast<double>(n));
            norm2 += e * e;
        }
        cplx overlap{};
        for (std::size_t n = 0; n < N; ++n) overlap += std::conj(phi[n]) * psi[n];
        out[c] = std::norm(overlap) / norm2;
    }
}

}  // namespace qphase::kernels::serial
