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

#include "qphase/rotator.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qphase/error.hpp"
#include "qphase/kernels.hpp"

namespace qphase {

RotatorParams RotatorParams::standard(int n_q, double K) {
    if (n_q < 1 || n_q > 30) fail(ErrorCategory::invalid_parameter, "n_q must be in [1, 30]");
    if (!(K >= 0.0) || !std::isfinite(K)) fail(ErrorCategory::invalid_parameter, "K must be finite and >= 0");
    RotatorParams p;
    p.n_q = n_q;
    p.N = std::size_t{1} << n_q;
    p.T = 2.0 * std::numbers::pi / static_cast<double>(p.N);
    p.K = K;
    p.k = K / p.T;
    p.single_cell = true;
    return p;
}

RotatorParams RotatorParams::general(int n_q, double k, double T) {
    if (n_q < 1 || n_q > 30) fail(ErrorCategory::invalid_parameter, "n_q must be in [1, 30]");
    if (!(T > 0.0) || !std::isfinite(T)) fail(ErrorCategory::invalid_parameter, "T must be > 0");
    if (!(k >= 0.0) || !std::isfinite(k)) fail(ErrorCategory::invalid_parameter, "k must be >= 0");
    RotatorParams p;
    p.n_q = n_q;
    p.N = std::size_t{1} << n_q;
    p.T = T;
    p.k = k;
    p.K = k * T;
    p.single_cell = false;
    return p;
}

StateVector initial_band_state(const RotatorParams &params) {
    if (params.n_q < 3) {
        fail(ErrorCategory::invalid_parameter, "band state needs n_q >= 3 (N/8 >= 1)");
    }
    const std::size_t width = params.N / 8;
    std::vector<cplx> amps(params.N);
    const double a = 1.0 / std::sqrt(static_cast<double>(width));
    for (std::size_t n = 0; n < width; ++n) amps[n] = a;
    return StateVector::unchecked(std::move(amps));
}

FloquetOperator::FloquetOperator(const RotatorParams &params)
    : free_(params.N), kick_(params.N), free_conj_(params.N), kick_conj_(params.N) {
    const std::size_t N = params.N;
    for (std::size_t n = 0; n < N; ++n) {
        if (params.single_cell) {
            // T n^2 / 2 = pi n^2 / N
            const auto nn = static_cast<long long>((n * n) % (2 * N));
            free_[n] = detail::exp_i_pi_ratio(-nn, static_cast<long long>(N));
        } else {
            const double nd = static_cast<double>(n);
            free_[n] = std::polar(1.0, -params.T * nd * nd / 2.0);
        }
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(n) / static_cast<double>(N);
        kick_[n] = std::polar(1.0, -params.k * std::cos(theta));
        free_conj_[n] = std::conj(free_[n]);
        kick_conj_[n] = std::conj(kick_[n]);
    }
}

void FloquetOperator::apply(std::span<cplx> psi, bool conjugate) const {
    if (psi.size() != free_.size()) {
        fail(ErrorCategory::invalid_dimension, "state length " + std::to_string(psi.size()) +
                                                   " does not match rotator dimension " +
                                                   std::to_string(free_.size()));
    }
    const Direction to_angle = conjugate ? Direction::inverse : Direction::forward;
    kernels::multiply_phases(psi, conjugate ? free_conj_ : free_);
    kernels::block_dft(psi, psi.size(), to_angle);
    kernels::multiply_phases(psi, conjugate ? kick_conj_ : kick_);
    kernels::block_dft(psi, psi.size(), reverse(to_angle));
}

StateVector step(const StateVector &state, const RotatorParams &params, bool conjugate) {
    return evolve(state, params, 1, conjugate);
}

StateVector evolve(const StateVector &state, const RotatorParams &params, int t, bool conjugate) {
    if (t < 0) fail(ErrorCategory::invalid_parameter, "iteration count must be >= 0");
    if (state.size() != params.N) {
        fail(ErrorCategory::invalid_dimension, "state length does not match rotator dimension");
    }
    std::vector<cplx> psi = state.vector();
    if (t > 0) {
        const FloquetOperator op(params);
        for (int i = 0; i < t; ++i) op.apply(psi, conjugate);
    }
    return StateVector::unchecked(std::move(psi));
}

StateVector to_angle_representation(const StateVector &momentum, bool conjugate_register) {
    return qft(momentum, conjugate_register ? Direction::inverse : Direction::forward);
}

}  // namespace qphase
