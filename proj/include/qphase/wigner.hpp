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

#include "qphase/grid.hpp"
#include "qphase/rotator.hpp"
#include "qphase/statevec.hpp"

namespace qphase {

/// Discrete Wigner function W(Theta, n) on the 2N x 2N lattice,
///
///   W(Theta, n) = (1/2N) sum_m e^{-2 pi i n (m - Theta/2) / N} psi*(Theta - m) psi(m),
///
/// with psi in the angle representation and the sum restricted to
/// 0 <= Theta - m < N. Only the distinct 2N x N block (n < N) is stored; the
/// other half follows from W(Theta, n + N) = (-1)^Theta W(Theta, n), which is
/// the same formula evaluated at n + N.
///
/// Sum rules for a normalized state: sum W = 1 and sum W^2 = 1/(2N).
class WignerGrid {
  public:
    WignerGrid() = default;
    WignerGrid(std::size_t N, Grid2D<double> block, double imag_residue);

    std::size_t dimension() const noexcept { return N_; }
    std::size_t side() const noexcept { return 2 * N_; }

    /// Theta, n in [0, 2N).
    double operator()(std::size_t theta, std::size_t n) const noexcept {
        if (n < N_) return block_(theta, n);
        const double v = block_(theta, n - N_);
        return (theta & 1U) ? -v : v;
    }

    const Grid2D<double> &distinct_block() const noexcept { return block_; }
    Grid2D<double> materialize() const;

    /// Largest |Im W| seen during construction.
    double imag_residue() const noexcept { return imag_residue_; }

    double sum() const noexcept;
    double sum_squares() const noexcept;
    double sum_fourth() const noexcept;
    double max_abs() const noexcept;

  private:
    std::size_t N_ = 0;
    Grid2D<double> block_;
    double imag_residue_ = 0.0;
};

/// sum W^2 over the full lattice for a normalized state.
constexpr double wigner_square_sum(std::size_t N) noexcept { return 1.0 / (2.0 * static_cast<double>(N)); }

/// Direct evaluation from the angle representation. Throws invalid-state for
/// a non-normalized input.
WignerGrid wigner_direct(std::span<const cplx> psi_angle);
WignerGrid wigner_direct(const StateVector &psi_angle);

struct WignerPipelineResult {
    WignerGrid grid;
    /// sqrt(2N) sum W(Theta, n) |Theta>|n>, Theta-major, 2n_q + 2 qubits.
    StateVector final_state;
};

inline constexpr int kDefaultPipelineQubitCap = 10;

/// Builds the Wigner function as register amplitudes: psi0 (x) psi0*, t map
/// iterations on each half, angle representation, |theta>|theta'> ->
/// |theta + theta'>|theta'>, DFT of the second register, duplication qubit as
/// the most significant bit of n, phase correction. `psi0` is in the momentum
/// representation.
WignerPipelineResult wigner_register_pipeline(const StateVector &psi0, const RotatorParams &params,
                                              int t, int max_qubits = kDefaultPipelineQubitCap);

/// xi = 1 / (N^2 sum W^4).
double wigner_ipr(const WignerGrid &grid);
/// Same formula on an arbitrary 2N x 2N array (e.g. wavelet coefficients).
double wigner_ipr(std::span<const double> values, std::size_t N);

struct SumRuleReport {
    double sum = 0.0;
    double sum_squares = 0.0;
    double expected_sum_squares = 0.0;
    double max_abs = 0.0;
    double bound = 0.0;
    double imag_residue = 0.0;
    bool ok = false;
};

SumRuleReport check_sum_rules(const WignerGrid &grid, double tolerance = 1e-8);

}  // namespace qphase
