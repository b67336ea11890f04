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

#include "qphase/statevec.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qphase/error.hpp"
#include "qphase/kernels.hpp"
#include "qphase/rng.hpp"

namespace qphase {
namespace {

int checked_qubits(std::size_t n) {
    if (!is_power_of_two(n)) {
        fail(ErrorCategory::invalid_dimension,
             "state length " + std::to_string(n) + " is not a power of two");
    }
    return exact_log2(n);
}

}  // namespace

int exact_log2(std::size_t n) {
    if (!is_power_of_two(n)) {
        fail(ErrorCategory::invalid_dimension, std::to_string(n) + " is not a power of two");
    }
    int k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

double norm_squared(std::span<const cplx> v) noexcept {
    double s = 0.0;
    for (const auto &a : v) s += std::norm(a);
    return s;
}

cplx inner_product(std::span<const cplx> a, std::span<const cplx> b) noexcept {
    cplx s{};
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amplitudes, double tolerance) {
    const int nq = checked_qubits(amplitudes.size());
    const double n2 = qphase::norm_squared(amplitudes);
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > tolerance) {
        fail(ErrorCategory::invalid_state,
             "state is not normalized (sum |a|^2 = " + std::to_string(n2) + ")");
    }
    return StateVector(std::move(amplitudes), nq);
}

StateVector StateVector::normalized(std::vector<cplx> amplitudes) {
    const int nq = checked_qubits(amplitudes.size());
    const double n2 = qphase::norm_squared(amplitudes);
    if (!(n2 > 0.0) || !std::isfinite(n2)) {
        fail(ErrorCategory::degenerate_input, "cannot normalize a zero or non-finite vector");
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto &a : amplitudes) a *= inv;
    return StateVector(std::move(amplitudes), nq);
}

StateVector StateVector::unchecked(std::vector<cplx> amplitudes) {
    const int nq = checked_qubits(amplitudes.size());
    return StateVector(std::move(amplitudes), nq);
}

StateVector StateVector::basis(int num_qubits, std::size_t index) {
    if (num_qubits < 0 || num_qubits > 40) {
        fail(ErrorCategory::invalid_parameter, "qubit count out of range");
    }
    const std::size_t n = std::size_t{1} << num_qubits;
    if (index >= n) fail(ErrorCategory::invalid_parameter, "basis index out of range");
    std::vector<cplx> amps(n);
    amps[index] = 1.0;
    return StateVector(std::move(amps), num_qubits);
}

StateVector StateVector::uniform(int num_qubits) {
    const std::size_t n = std::size_t{1} << num_qubits;
    return StateVector(std::vector<cplx>(n, cplx{1.0 / std::sqrt(static_cast<double>(n)), 0.0}),
                       num_qubits);
}

StateVector StateVector::random(int num_qubits, std::uint64_t seed) {
    const std::size_t n = std::size_t{1} << num_qubits;
    Rng rng(seed);
    std::vector<cplx> amps(n);
    for (auto &a : amps) {
        // Box-Muller: two independent normals per amplitude.
        const double u1 = 1.0 - rng.uniform();
        const double u2 = rng.uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        a = std::polar(r, 2.0 * std::numbers::pi * u2);
    }
    return normalized(std::move(amps));
}

double StateVector::norm_squared() const noexcept { return qphase::norm_squared(amplitudes_); }

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amplitudes_.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(amplitudes_[i]);
    return p;
}

StateVector qft(const StateVector &state, Direction direction) {
    std::vector<cplx> out = state.vector();
    kernels::block_dft(out, out.size(), direction);
    return StateVector::unchecked(std::move(out));
}

StateVector partial_qft_blocks(const StateVector &state, std::size_t block_size,
                               Direction direction) {
    if (!is_power_of_two(block_size) || block_size > state.size()) {
        fail(ErrorCategory::invalid_dimension,
             "block size " + std::to_string(block_size) + " does not divide " +
                 std::to_string(state.size()));
    }
    std::vector<cplx> out = state.vector();
    if (block_size > 1) kernels::block_dft(out, block_size, direction);
    return StateVector::unchecked(std::move(out));
}

StateVector tensor_product(const StateVector &a, const StateVector &b) {
    const std::size_t nb = b.size();
    std::vector<cplx> out(a.size() * nb);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < nb; ++j) out[i * nb + j] = a[i] * b[j];
    }
    return StateVector::unchecked(std::move(out));
}

StateVector conjugate(const StateVector &state) {
    std::vector<cplx> out = state.vector();
    for (auto &v : out) v = std::conj(v);
    return StateVector::unchecked(std::move(out));
}

}  // namespace qphase
