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

#include "qphase/husimi.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qphase/error.hpp"
#include "qphase/kernels.hpp"
#include "qphase/measurement.hpp"

namespace qphase {
namespace {

std::size_t husimi_side(const StateVector &state) {
    if (state.num_qubits() % 2 != 0) {
        fail(ErrorCategory::invalid_parameter,
             "modified Husimi needs an even qubit count, got " + std::to_string(state.num_qubits()));
    }
    return std::size_t{1} << (state.num_qubits() / 2);
}

}  // namespace

HusimiGrid::HusimiGrid(std::size_t side, std::vector<cplx> values)
    : side_(side), values_(side, side, std::move(values)) {}

Grid2D<double> HusimiGrid::probabilities() const {
    Grid2D<double> p(side_, side_);
    for (std::size_t i = 0; i < p.size(); ++i) p.data()[i] = std::norm(values_.data()[i]);
    return p;
}

Grid2D<double> HusimiGrid::moduli() const {
    Grid2D<double> m(side_, side_);
    for (std::size_t i = 0; i < m.size(); ++i) m.data()[i] = std::abs(values_.data()[i]);
    return m;
}

double HusimiGrid::total_probability() const noexcept { return norm_squared(values_.data()); }

HusimiGrid modified_husimi(const StateVector &state) {
    const std::size_t side = husimi_side(state);
    // <phi^(p)|psi> = N^{-1/4} sum_r e^{+2 pi i l r / sqrt(N)} psi(j sqrt(N) + r):
    // an inverse unitary DFT inside each block of sqrt(N) momenta.
    StateVector transformed = partial_qft_blocks(state, side, Direction::inverse);
    return HusimiGrid(side, std::move(transformed).release());
}

StateVector coherent_state(std::size_t N, double theta0, double n0, double a) {
    if (!(a > 0.0)) fail(ErrorCategory::invalid_parameter, "coherent-state width must be > 0");
    const long images = static_cast<long>(std::ceil(12.0 * a / static_cast<double>(N))) + 1;
    std::vector<cplx> phi(N);
    for (std::size_t n = 0; n < N; ++n) {
        double e = 0.0;
        for (long k = -images; k <= images; ++k) {
            const double d = static_cast<double>(n) - n0 + static_cast<double>(k * static_cast<long>(N));
            e += std::exp(-d * d / (4.0 * a * a));
        }
        phi[n] = std::polar(e, -theta0 * static_cast<double>(n));
    }
    return StateVector::normalized(std::move(phi));
}

CoherentStateParams CoherentStateParams::lattice(std::size_t N, std::size_t n_theta, std::size_t n_mom,
                                                 double a) {
    CoherentStateParams p;
    p.a = a;
    p.centers.reserve(n_theta * n_mom);
    for (std::size_t i = 0; i < n_theta; ++i) {
        const double theta0 = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_theta);
        for (std::size_t j = 0; j < n_mom; ++j) {
            p.centers.emplace_back(theta0, static_cast<double>(j * N) / static_cast<double>(n_mom));
        }
    }
    return p;
}

double CoherentStateParams::default_width(std::size_t N) {
    return std::sqrt(static_cast<double>(N) / (4.0 * std::numbers::pi));
}

std::vector<double> gaussian_husimi(const StateVector &state, const CoherentStateParams &params) {
    if (!(params.a > 0.0)) fail(ErrorCategory::invalid_parameter, "coherent-state width must be > 0");
    const double N = static_cast<double>(state.size());
    std::vector<double> theta0, n0;
    theta0.reserve(params.centers.size());
    n0.reserve(params.centers.size());
    for (const auto &[th, n] : params.centers) {
        if (!std::isfinite(th) || !std::isfinite(n) || n < 0.0 || n >= N) {
            fail(ErrorCategory::invalid_parameter, "coherent-state center out of range");
        }
        theta0.push_back(th);
        n0.push_back(n);
    }
    std::vector<double> out(params.centers.size());
    kernels::gaussian_overlaps(state.amplitudes(), theta0, n0, params.a, out);
    return out;
}

ModulusState husimi_modulus_state(const StateVector &state, int t, int max_qubits) {
    const std::size_t side = husimi_side(state);
    if (state.num_qubits() > max_qubits) {
        fail(ErrorCategory::resource, "two-register Husimi simulation needs " +
                                          std::to_string(2 * state.num_qubits()) +
                                          " qubits; cap is n_q <= " + std::to_string(max_qubits));
    }
    const HusimiGrid h = modified_husimi(state);
    const auto &H = h.values().storage();
    const std::size_t N = side * side;

    // H (x) H*, then keep the components with equal indices in both registers.
    std::vector<cplx> pair(N * N);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t aa = 0; aa < static_cast<std::ptrdiff_t>(N); ++aa) {
        const auto a = static_cast<std::size_t>(aa);
        for (std::size_t b = 0; b < N; ++b) pair[a * N + b] = H[a] * std::conj(H[b]);
    }
    std::vector<cplx> diagonal(N);
    double weight = 0.0;
    for (std::size_t a = 0; a < N; ++a) {
        diagonal[a] = pair[a * N + a];
        weight += std::norm(diagonal[a]);
    }
    if (!(weight > 0.0)) fail(ErrorCategory::degenerate_input, "Husimi diagonal has zero weight");
    const double inv = 1.0 / std::sqrt(weight);
    for (auto &v : diagonal) v = cplx{v.real() * inv, 0.0};

    ModulusState out{StateVector::unchecked(std::move(diagonal)), weight, 0, 0.0};
    out.amplification_iterations = weight >= 1.0 ? 0 : optimal_iterations(weight);
    out.nominal_cost = static_cast<double>(t) * (2.0 * out.amplification_iterations + 1.0);
    return out;
}

}  // namespace qphase
