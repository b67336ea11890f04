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

#include <vector>

#include "qphase/statevec.hpp"

namespace qphase {

/// Parameters of the kicked rotator U = exp(-i k cos theta) exp(-i T n^2 / 2)
/// on an N = 2^{n_q} dimensional momentum space with n in {0, ..., N-1}.
struct RotatorParams {
    int n_q = 0;
    std::size_t N = 0;
    double K = 0.0;
    double T = 0.0;
    double k = 0.0;
    /// True when T is exactly 2 pi / N; the free phase is then evaluated with
    /// integer reduction of n^2 and is N-periodic.
    bool single_cell = false;

    /// T = 2 pi / N, k = K / T.
    static RotatorParams standard(int n_q, double K);
    static RotatorParams general(int n_q, double k, double T);
};

/// Amplitude sqrt(8/N) on momenta 0 <= n < N/8.
StateVector initial_band_state(const RotatorParams &params);

/// Precomputed diagonal phases of one map iteration.
class FloquetOperator {
  public:
    explicit FloquetOperator(const RotatorParams &params);

    /// One application of U (or U* when `conjugate`) in place on a
    /// momentum-representation vector of length N.
    void apply(std::span<cplx> psi, bool conjugate) const;

    std::span<const cplx> free_phases() const noexcept { return free_; }
    std::span<const cplx> kick_phases() const noexcept { return kick_; }

  private:
    std::vector<cplx> free_;
    std::vector<cplx> kick_;
    std::vector<cplx> free_conj_;
    std::vector<cplx> kick_conj_;
};

StateVector step(const StateVector &state, const RotatorParams &params, bool conjugate = false);
StateVector evolve(const StateVector &state, const RotatorParams &params, int t,
                   bool conjugate = false);

/// Momentum -> angle representation (theta_j = 2 pi j / N) by the forward
/// DFT. For a register holding psi* the inverse DFT is used, which yields the
/// complex conjugate of the angle representation of psi.
StateVector to_angle_representation(const StateVector &momentum, bool conjugate_register = false);

}  // namespace qphase
