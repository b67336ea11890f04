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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "qphase/grid.hpp"

namespace qphase {

/// Point of the classical standard map in rescaled variables (theta, p = T n).
/// theta is kept in [0, 2 pi) and p in [-pi, pi); `winding` counts how many
/// times p has been folded back so the unwrapped momentum can be recovered.
struct PhasePoint {
    double theta = 0.0;
    double p = 0.0;
    std::int64_t winding = 0;

    double unwrapped_p() const noexcept { return p + 2.0 * std::numbers::pi * static_cast<double>(winding); }
};

inline double wrap_angle(double theta) noexcept {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    theta -= two_pi * std::floor(theta / two_pi);
    return theta >= two_pi ? 0.0 : theta;
}

/// Folds p into [-pi, pi) and records the fold count in `winding`.
inline void wrap_momentum(PhasePoint &pt) noexcept {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double folds = std::floor((pt.p + std::numbers::pi) / two_pi);
    pt.p -= two_pi * folds;
    if (pt.p >= std::numbers::pi) {
        pt.p -= two_pi;
        pt.winding += 1;
    }
    pt.winding += static_cast<std::int64_t>(folds);
}

/// One iteration p' = p + K sin(theta), theta' = theta + p'.
inline void advance(PhasePoint &pt, double K) noexcept {
    pt.p += K * std::sin(pt.theta);
    pt.theta = wrap_angle(pt.theta + pt.p);
    wrap_momentum(pt);
}

/// Exact inverse of `advance`: theta = theta' - p', p = p' - K sin(theta).
inline void retreat(PhasePoint &pt, double K) noexcept {
    pt.theta = wrap_angle(pt.theta - pt.p);
    pt.p -= K * std::sin(pt.theta);
    wrap_momentum(pt);
}

struct ClassicalEnsemble {
    std::vector<PhasePoint> points;
    double K = 0.0;
};

/// Normalized occupation histogram. Rows are theta bins over [0, 2 pi), columns
/// are p bins over [-pi, pi).
struct DensityGrid {
    Grid2D<double> mass;

    std::size_t n_theta() const noexcept { return mass.rows(); }
    std::size_t n_p() const noexcept { return mass.cols(); }
};

/// Uniform random points with theta in [0, 2 pi) and p in [p_lo, p_hi].
/// The defaults are the band -pi <= p <= -3 pi / 4.
ClassicalEnsemble band_ensemble(double K, std::size_t count, std::uint64_t seed,
                                double p_lo = -std::numbers::pi,
                                double p_hi = -0.75 * std::numbers::pi);

ClassicalEnsemble step_ensemble(const ClassicalEnsemble &e);
ClassicalEnsemble step_ensemble_inverse(const ClassicalEnsemble &e);
ClassicalEnsemble evolve_ensemble(const ClassicalEnsemble &e, int t);

DensityGrid histogram_density(const ClassicalEnsemble &e, std::size_t n_theta, std::size_t n_p);

/// Standard deviation of the unwrapped momentum.
double momentum_spread(const ClassicalEnsemble &e);

}  // namespace qphase
