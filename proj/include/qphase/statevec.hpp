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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qphase {

using cplx = std::complex<double>;

/// Sign convention of the unitary DFT. `forward` maps
/// f(n) -> N^{-1/2} sum_n e^{-2 pi i k n / N} f(n); `inverse` uses e^{+...}.
/// Both directions carry the 1/sqrt(N) factor.
enum class Direction { forward, inverse };

constexpr Direction reverse(Direction d) noexcept {
    return d == Direction::forward ? Direction::inverse : Direction::forward;
}

constexpr bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

/// log2 of a power of two.
int exact_log2(std::size_t n);

inline constexpr double kNormTolerance = 1e-10;

/// Normalized amplitude vector of an n_q-qubit register, length 2^{n_q}.
class StateVector {
  public:
    /// Validates length and normalization (within `tolerance`).
    static StateVector from_amplitudes(std::vector<cplx> amplitudes,
                                       double tolerance = kNormTolerance);
    /// Rescales to unit norm. Throws degenerate-input for the zero vector.
    static StateVector normalized(std::vector<cplx> amplitudes);
    /// No normalization check; the caller guarantees the invariant (e.g. the
    /// result of a unitary applied to a valid state).
    static StateVector unchecked(std::vector<cplx> amplitudes);

    static StateVector basis(int num_qubits, std::size_t index);
    static StateVector uniform(int num_qubits);
    /// Gaussian-random amplitudes from a seeded SplitMix64 stream.
    static StateVector random(int num_qubits, std::uint64_t seed);

    std::size_t size() const noexcept { return amplitudes_.size(); }
    int num_qubits() const noexcept { return num_qubits_; }

    std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
    const std::vector<cplx> &vector() const noexcept { return amplitudes_; }
    std::vector<cplx> release() && noexcept { return std::move(amplitudes_); }
    const cplx &operator[](std::size_t i) const { return amplitudes_[i]; }

    double norm_squared() const noexcept;
    std::vector<double> probabilities() const;

  private:
    StateVector(std::vector<cplx> amplitudes, int num_qubits)
        : amplitudes_(std::move(amplitudes)), num_qubits_(num_qubits) {}

    std::vector<cplx> amplitudes_;
    int num_qubits_ = 0;
};

double norm_squared(std::span<const cplx> v) noexcept;
cplx inner_product(std::span<const cplx> a, std::span<const cplx> b) noexcept;

/// Unitary DFT of the whole register.
StateVector qft(const StateVector &state, Direction direction);

/// Independent `block_size`-point unitary DFT inside each contiguous block.
StateVector partial_qft_blocks(const StateVector &state, std::size_t block_size,
                               Direction direction);

/// Component (i * N_b + j) = a_i * b_j.
StateVector tensor_product(const StateVector &a, const StateVector &b);

StateVector conjugate(const StateVector &state);

}  // namespace qphase
