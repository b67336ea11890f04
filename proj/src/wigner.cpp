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

#include "qphase/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qphase/error.hpp"
#include "qphase/kernels.hpp"

namespace qphase {
namespace {

// Applies `fn` to each length-dim1 slice of register 1 (stride dim2) in a
// dim1 x dim2 two-register vector.
template <typename Fn>
void for_each_first_register_slice(std::vector<cplx> &v, std::size_t dim1, std::size_t dim2, Fn fn) {
#pragma omp parallel
    {
        std::vector<cplx> slice(dim1);
#pragma omp for schedule(static)
        for (std::ptrdiff_t jj = 0; jj < static_cast<std::ptrdiff_t>(dim2); ++jj) {
            const auto j = static_cast<std::size_t>(jj);
            for (std::size_t i = 0; i < dim1; ++i) slice[i] = v[i * dim2 + j];
            fn(std::span<cplx>(slice));
            for (std::size_t i = 0; i < dim1; ++i) v[i * dim2 + j] = slice[i];
        }
    }
}

template <typename Fn>
void for_each_second_register_slice(std::vector<cplx> &v, std::size_t dim1, std::size_t dim2, Fn fn) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(dim1); ++ii) {
        fn(std::span<cplx>(v.data() + static_cast<std::size_t>(ii) * dim2, dim2));
    }
}

}  // namespace

WignerGrid::WignerGrid(std::size_t N, Grid2D<double> block, double imag_residue)
    : N_(N), block_(std::move(block)), imag_residue_(imag_residue) {
    if (block_.rows() != 2 * N_ || block_.cols() != N_) {
        fail(ErrorCategory::invalid_dimension, "Wigner block must be 2N x N");
    }
}

Grid2D<double> WignerGrid::materialize() const {
    Grid2D<double> full(2 * N_, 2 * N_);
    for (std::size_t th = 0; th < 2 * N_; ++th) {
        for (std::size_t n = 0; n < 2 * N_; ++n) full(th, n) = (*this)(th, n);
    }
    return full;
}

// The n >= N half has the same magnitudes, and its column sums vanish for odd
// Theta and double for even Theta.
double WignerGrid::sum() const noexcept {
    double s = 0.0;
    for (std::size_t th = 0; th < 2 * N_; th += 2) {
        for (double v : block_.row(th)) s += 2.0 * v;
    }
    return s;
}

double WignerGrid::sum_squares() const noexcept {
    double s = 0.0;
    for (double v : block_.data()) s += v * v;
    return 2.0 * s;
}

double WignerGrid::sum_fourth() const noexcept {
    double s = 0.0;
    for (double v : block_.data()) s += (v * v) * (v * v);
    return 2.0 * s;
}

double WignerGrid::max_abs() const noexcept {
    double m = 0.0;
    for (double v : block_.data()) m = std::max(m, std::abs(v));
    return m;
}

WignerGrid wigner_direct(std::span<const cplx> psi_angle) {
    if (!is_power_of_two(psi_angle.size())) {
        fail(ErrorCategory::invalid_dimension, "state length must be a power of two");
    }
    const double n2 = norm_squared(psi_angle);
    if (std::abs(n2 - 1.0) > kNormTolerance) {
        fail(ErrorCategory::invalid_state,
             "Wigner input is not normalized (sum |psi|^2 = " + std::to_string(n2) + ")");
    }
    Grid2D<double> block;
    const double residue = kernels::wigner_block(psi_angle, block);
    return WignerGrid(psi_angle.size(), std::move(block), residue);
}

WignerGrid wigner_direct(const StateVector &psi_angle) { return wigner_direct(psi_angle.amplitudes()); }

WignerPipelineResult wigner_register_pipeline(const StateVector &psi0, const RotatorParams &params,
                                              int t, int max_qubits) {
    if (psi0.size() != params.N) {
        fail(ErrorCategory::invalid_dimension, "initial state does not match rotator dimension");
    }
    if (params.n_q > max_qubits) {
        fail(ErrorCategory::resource, "pipeline register of " + std::to_string(2 * params.n_q + 2) +
                                          " qubits exceeds the configured cap (n_q <= " +
                                          std::to_string(max_qubits) + ")");
    }
    if (t < 0) fail(ErrorCategory::invalid_parameter, "iteration count must be >= 0");
    const std::size_t N = params.N;

    // |psi0> (x) |psi0*>, index i * N + j.
    std::vector<cplx> reg = tensor_product(psi0, conjugate(psi0)).vector();

    // Independent evolution of both halves: U on register 1, U* on register 2.
    if (t > 0) {
        const FloquetOperator op(params);
        for (int s = 0; s < t; ++s) {
            for_each_first_register_slice(reg, N, N, [&](std::span<cplx> x) { op.apply(x, false); });
            for_each_second_register_slice(reg, N, N, [&](std::span<cplx> x) { op.apply(x, true); });
        }
    }

    // Angle representation: psi(theta) psi*(theta').
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(N));
    for_each_first_register_slice(reg, N, N, [&](std::span<cplx> x) {
        detail::fft_inplace(x.data(), N, Direction::forward);
        for (auto &v : x) v *= inv_sqrt_n;
    });
    for_each_second_register_slice(reg, N, N, [&](std::span<cplx> x) {
        detail::fft_inplace(x.data(), N, Direction::inverse);
        for (auto &v : x) v *= inv_sqrt_n;
    });

    // Carry qubit on register 1, then |theta>|theta'> -> |theta + theta'>|theta'>.
    std::vector<cplx> added(2 * N * N);
    for (std::size_t th = 0; th < N; ++th) {
        for (std::size_t tp = 0; tp < N; ++tp) added[(th + tp) * N + tp] = reg[th * N + tp];
    }
    reg.clear();
    reg.shrink_to_fit();

    // DFT of register 2 (theta' -> n): amplitudes 2 sqrt(N) W e^{+i pi n Theta / N}.
    kernels::block_dft(added, N, Direction::inverse);

    // Duplication qubit (Hadamard on |0>) as the most significant bit of n,
    // followed by the phase correction e^{-i pi n Theta / N} for n in [0, 2N).
    const std::size_t side = 2 * N;
    std::vector<cplx> out(side * side);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t tt = 0; tt < static_cast<std::ptrdiff_t>(side); ++tt) {
        const auto theta = static_cast<std::size_t>(tt);
        for (std::size_t n = 0; n < side; ++n) {
            const cplx a = added[theta * N + (n % N)] * inv_sqrt2;
            out[theta * side + n] =
                a * detail::exp_i_pi_ratio(-static_cast<long long>(n * theta), static_cast<long long>(N));
        }
    }

    const double inv_scale = 1.0 / std::sqrt(static_cast<double>(side));
    Grid2D<double> block(side, N);
    double residue = 0.0;
    for (std::size_t th = 0; th < side; ++th) {
        for (std::size_t n = 0; n < side; ++n) {
            const cplx w = out[th * side + n] * inv_scale;
            if (n < N) block(th, n) = w.real();
            residue = std::max(residue, std::abs(w.imag()));
        }
    }
    return {WignerGrid(N, std::move(block), residue), StateVector::unchecked(std::move(out))};
}

double wigner_ipr(const WignerGrid &grid) {
    const double s4 = grid.sum_fourth();
    if (!(s4 > 0.0)) fail(ErrorCategory::degenerate_input, "all-zero Wigner grid");
    const double N = static_cast<double>(grid.dimension());
    return 1.0 / (N * N * s4);
}

double wigner_ipr(std::span<const double> values, std::size_t N) {
    double s4 = 0.0;
    for (double v : values) s4 += (v * v) * (v * v);
    if (!(s4 > 0.0)) fail(ErrorCategory::degenerate_input, "all-zero Wigner grid");
    const double n = static_cast<double>(N);
    return 1.0 / (n * n * s4);
}

SumRuleReport check_sum_rules(const WignerGrid &grid, double tolerance) {
    SumRuleReport r;
    r.sum = grid.sum();
    r.sum_squares = grid.sum_squares();
    r.expected_sum_squares = wigner_square_sum(grid.dimension());
    r.max_abs = grid.max_abs();
    r.bound = 1.0 / (2.0 * static_cast<double>(grid.dimension()));
    r.imag_residue = grid.imag_residue();
    r.ok = std::abs(r.sum - 1.0) <= tolerance &&
           std::abs(r.sum_squares - r.expected_sum_squares) <= tolerance &&
           r.max_abs <= r.bound + 1e-12 && r.imag_residue < 1e-10;
    return r;
}

}  // namespace qphase
