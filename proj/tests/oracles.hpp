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

#pragma once

// Independent reference computations for the unit and acceptance tests.
// Each one follows the defining formula directly, in long double where the
// sum is long, and shares no code with the library.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace qphase::oracle {

using cplx = std::complex<double>;
using lcplx = std::complex<long double>;

inline constexpr long double kPi = 3.141592653589793238462643383279502884L;

inline lcplx cis(long double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Unitary DFT, sign = -1 for the forward transform e^{-2 pi i k n / N}.
inline std::vector<cplx> dft(const std::vector<cplx> &x, int sign) {
    const std::size_t N = x.size();
    std::vector<cplx> y(N);
    const long double scale = 1.0L / std::sqrt(static_cast<long double>(N));
    for (std::size_t k = 0; k < N; ++k) {
        lcplx acc = 0;
        for (std::size_t n = 0; n < N; ++n) {
            const auto kn = static_cast<long double>((k * n) % N);
            acc += lcplx(x[n].real(), x[n].imag()) * cis(sign * 2.0L * kPi * kn / static_cast<long double>(N));
        }
        y[k] = cplx(static_cast<double>(acc.real() * scale), static_cast<double>(acc.imag() * scale));
    }
    return y;
}

/// Discrete Wigner function on the full 2N x 2N grid:
/// W(T, n) = 1/(2N) sum_m e^{-i pi n (2m - T) / N} conj(psi(T - m)) psi(m),
/// summed over 0 <= m < N, 0 <= T - m < N. Indexed [T * 2N + n].
inline std::vector<double> wigner(const std::vector<cplx> &psi) {
    const long N = static_cast<long>(psi.size());
    std::vector<double> W(static_cast<std::size_t>(4 * N * N));
    for (long T = 0; T < 2 * N; ++T) {
        for (long n = 0; n < 2 * N; ++n) {
            lcplx acc = 0;
            for (long m = 0; m < N; ++m) {
                const long a = T - m;
                if (a < 0 || a >= N) continue;
                const long phase = (n * (2 * m - T)) % (2 * N);
                const lcplx p1(psi[a].real(), -psi[a].imag());
                const lcplx p2(psi[m].real(), psi[m].imag());
                acc += cis(-kPi * static_cast<long double>(phase) / static_cast<long double>(N)) * p1 * p2;
            }
            W[static_cast<std::size_t>(T * 2 * N + n)] = static_cast<double>(acc.real() / (2.0L * N));
        }
    }
    return W;
}

/// Box-window coherent-state overlap <phi_(theta0, n0)|psi> with
/// theta0 = 2 pi l / M and n0 = j M, M = sqrt(N).
inline cplx husimi_amplitude(const std::vector<cplx> &psi, std::size_t l, std::size_t j) {
    const std::size_t N = psi.size();
    const auto M = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(N))));
    const long double theta0 = 2.0L * kPi * static_cast<long double>(l) / static_cast<long double>(M);
    lcplx acc = 0;
    for (std::size_t n = j * M; n < j * M + M; ++n) {
        acc += cis(theta0 * static_cast<long double>(n)) * lcplx(psi[n].real(), psi[n].imag());
    }
    acc /= std::pow(static_cast<long double>(N), 0.25L);
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

/// Dense D4 analysis matrix (L x L) for `levels` pyramidal stages, periodic
/// wrap. Row order: coarsest approximation first, then details coarse to fine.
inline std::vector<std::vector<double>> d4_matrix(std::size_t L, int levels) {
    const long double s3 = std::sqrt(3.0L);
    const long double d = 4.0L * std::sqrt(2.0L);
    const long double h[4] = {(1 + s3) / d, (3 + s3) / d, (3 - s3) / d, (1 - s3) / d};
    const long double g[4] = {h[3], -h[2], h[1], -h[0]};
    // Start from identity; each level replaces the leading `len` rows.
    std::vector<std::vector<long double>> M(L, std::vector<long double>(L, 0.0L));
    for (std::size_t i = 0; i < L; ++i) M[i][i] = 1.0L;
    std::size_t len = L;
    for (int lev = 0; lev < levels; ++lev) {
        std::vector<std::vector<long double>> next = M;
        const std::size_t half = len / 2;
        for (std::size_t k = 0; k < half; ++k) {
            for (std::size_t col = 0; col < L; ++col) {
                long double a = 0, b = 0;
                for (int t = 0; t < 4; ++t) {
                    const std::size_t src = (2 * k + static_cast<std::size_t>(t)) % len;
                    a += h[t] * M[src][col];
                    b += g[t] * M[src][col];
                }
                next[k][col] = a;
                next[half + k][col] = b;
            }
        }
        M = std::move(next);
        len = half;
    }
    std::vector<std::vector<double>> out(L, std::vector<double>(L));
    for (std::size_t r = 0; r < L; ++r) {
        for (std::size_t c = 0; c < L; ++c) out[r][c] = static_cast<double>(M[r][c]);
    }
    return out;
}

inline std::vector<double> apply(const std::vector<std::vector<double>> &M, const std::vector<double> &x) {
    std::vector<double> y(M.size(), 0.0);
    for (std::size_t r = 0; r < M.size(); ++r) {
        long double acc = 0;
        for (std::size_t c = 0; c < x.size(); ++c) acc += static_cast<long double>(M[r][c]) * x[c];
        y[r] = static_cast<double>(acc);
    }
    return y;
}

/// One amplification round as an explicit matrix product
/// (I - 2|psi0><psi0|)(I - 2P) applied to psi.
inline std::vector<cplx> reflection_product(const std::vector<cplx> &psi0, const std::vector<bool> &region,
                                            const std::vector<cplx> &psi) {
    const std::size_t N = psi.size();
    std::vector<std::vector<lcplx>> A(N, std::vector<lcplx>(N, 0.0L)), B(N, std::vector<lcplx>(N, 0.0L));
    for (std::size_t i = 0; i < N; ++i) {
        B[i][i] = region[i] ? -1.0L : 1.0L;
        for (std::size_t j = 0; j < N; ++j) {
            const lcplx a(psi0[i].real(), psi0[i].imag()), b(psi0[j].real(), -psi0[j].imag());
            A[i][j] = (i == j ? 1.0L : 0.0L) - 2.0L * a * b;
        }
    }
    std::vector<cplx> out(N);
    for (std::size_t i = 0; i < N; ++i) {
        lcplx acc = 0;
        for (std::size_t k = 0; k < N; ++k) {
            lcplx inner = 0;
            for (std::size_t j = 0; j < N; ++j) inner += B[k][j] * lcplx(psi[j].real(), psi[j].imag());
            acc += A[i][k] * inner;
        }
        out[i] = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
    }
    return out;
}

/// Renyi-2 count exp2(H2) and Shannon count exp2(H1) for a normalized vector.
inline double renyi2_count(const std::vector<double> &p) {
    long double s = 0;
    for (double v : p) s += static_cast<long double>(v) * v;
    return static_cast<double>(1.0L / s);
}

inline double shannon_count(const std::vector<double> &p) {
    long double h = 0;
    for (double v : p) {
        if (v > 0) h -= static_cast<long double>(v) * std::log2(static_cast<long double>(v));
    }
    return static_cast<double>(std::exp2(h));
}

/// Random complex vector with unit norm drawn with the standard library
/// engine (independent of the library generator).
inline std::vector<cplx> random_state(std::size_t N, unsigned seed) {
    std::mt19937_64 eng(seed);
    std::normal_distribution<double> g;
    std::vector<cplx> v(N);
    long double s = 0;
    for (auto &x : v) {
        x = {g(eng), g(eng)};
        s += std::norm(x);
    }
    const double inv = static_cast<double>(1.0L / std::sqrt(s));
    for (auto &x : v) x *= inv;
    return v;
}

/// Least-squares slope of y on x.
inline double slope(const std::vector<double> &x, const std::vector<double> &y) {
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / sxx;
}

}  // namespace qphase::oracle
