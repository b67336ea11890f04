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

#include <utility>
#include <vector>

#include "qphase/grid.hpp"
#include "qphase/statevec.hpp"

namespace qphase {

/// Modified Husimi amplitudes H(l, j) on a sqrt(N) x sqrt(N) lattice.
///
/// Momentum n = j sqrt(N) + r is split into block j and offset r; theta_0 =
/// 2 pi l / sqrt(N) and n_0 = j sqrt(N). Storage is j-major, so the flat data
/// is exactly the register after the partial transform.
class HusimiGrid {
  public:
    HusimiGrid() = default;
    HusimiGrid(std::size_t side, std::vector<cplx> values);

    std::size_t side() const noexcept { return side_; }
    const cplx &at(std::size_t l, std::size_t j) const { return values_(j, l); }

    /// Rows j (momentum block), columns l (angle).
    const Grid2D<cplx> &values() const noexcept { return values_; }

    Grid2D<double> probabilities() const;
    Grid2D<double> moduli() const;
    double total_probability() const noexcept;

  private:
    std::size_t side_ = 0;
    Grid2D<cplx> values_;
};

/// `state` is in the momentum representation; n_q must be even.
HusimiGrid modified_husimi(const StateVector &state);

/// Unit-norm coherent state A sum_n e^{-(n - n0)^2 / 4a^2 - i theta0 n} |n>
/// with the Gaussian wrapped on the N-point momentum ring.
StateVector coherent_state(std::size_t N, double theta0, double n0, double a);

struct CoherentStateParams {
    double a = 0.0;
    /// (theta0, n0) pairs.
    std::vector<std::pair<double, double>> centers;

    /// Regular n_theta x n_mom lattice of centers, theta-major.
    static CoherentStateParams lattice(std::size_t N, std::size_t n_theta, std::size_t n_mom, double a);
    /// sqrt(N / 4 pi): equal resolution in theta and n cell units.
    static double default_width(std::size_t N);
};

/// |<phi_(theta0, n0)|psi>|^2 for each center, in `params.centers` order.
std::vector<double> gaussian_husimi(const StateVector &state, const CoherentStateParams &params);

struct ModulusState {
    /// Components |H|^2 / sqrt(sum |H|^4), j-major like HusimiGrid.
    StateVector state;
    /// Weight of the diagonal theta = theta', n = n' in H (x) H*.
    double diagonal_weight = 0.0;
    /// Amplitude-amplification rounds needed to reach the diagonal.
    int amplification_iterations = 0;
    /// Map applications for t iterations per state preparation:
    /// t (2 * iterations + 1).
    double nominal_cost = 0.0;
};

inline constexpr int kDefaultModulusQubitCap = 10;

/// Simulates H (x) H* on N^2 components, projects on the diagonal and
/// renormalizes. Throws resource above `max_qubits`.
ModulusState husimi_modulus_state(const StateVector &state, int t = 1,
                                  int max_qubits = kDefaultModulusQubitCap);

}  // namespace qphase
