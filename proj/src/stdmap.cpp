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

#include "qphase/stdmap.hpp"

#include <algorithm>

#include "qphase/error.hpp"
#include "qphase/kernels.hpp"
#include "qphase/rng.hpp"

namespace qphase {

ClassicalEnsemble band_ensemble(double K, std::size_t count, std::uint64_t seed, double p_lo,
                                double p_hi) {
    if (count == 0) fail(ErrorCategory::invalid_parameter, "ensemble must be nonempty");
    if (!(p_hi >= p_lo)) fail(ErrorCategory::invalid_parameter, "empty momentum band");
    ClassicalEnsemble e{std::vector<PhasePoint>(count), K};
    Rng rng(seed);
    for (auto &pt : e.points) {
        pt.theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
        pt.p = rng.uniform(p_lo, p_hi);
        wrap_momentum(pt);
    }
    return e;
}

ClassicalEnsemble step_ensemble(const ClassicalEnsemble &e) {
    ClassicalEnsemble out = e;
    kernels::standard_map_step(out.points, out.K);
    return out;
}

ClassicalEnsemble step_ensemble_inverse(const ClassicalEnsemble &e) {
    ClassicalEnsemble out = e;
    for (auto &pt : out.points) retreat(pt, out.K);
    return out;
}

ClassicalEnsemble evolve_ensemble(const ClassicalEnsemble &e, int t) {
    if (t < 0) fail(ErrorCategory::invalid_parameter, "iteration count must be >= 0");
    ClassicalEnsemble out = e;
    for (int i = 0; i < t; ++i) kernels::standard_map_step(out.points, out.K);
    return out;
}

DensityGrid histogram_density(const ClassicalEnsemble &e, std::size_t n_theta, std::size_t n_p) {
    if (n_theta == 0 || n_p == 0) fail(ErrorCategory::invalid_parameter, "histogram needs >= 1 bin per axis");
    if (e.points.empty()) fail(ErrorCategory::invalid_parameter, "ensemble must be nonempty");
    DensityGrid d{Grid2D<double>(n_theta, n_p)};
    constexpr double two_pi = 2.0 * std::numbers::pi;
    Grid2D<std::size_t> counts(n_theta, n_p);
    for (const auto &pt : e.points) {
        auto bin = [](double x, std::size_t n) {
            const auto i = static_cast<std::ptrdiff_t>(std::floor(x * static_cast<double>(n)));
            return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(n) - 1));
        };
        const std::size_t it = bin(pt.theta / two_pi, n_theta);
        const std::size_t ip = bin((pt.p + std::numbers::pi) / two_pi, n_p);
        ++counts(it, ip);
    }
    const double total = static_cast<double>(e.points.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        d.mass.data()[i] = static_cast<double>(counts.data()[i]) / total;
    }
    return d;
}

double momentum_spread(const ClassicalEnsemble &e) {
    if (e.points.empty()) return 0.0;
    double mean = 0.0;
    for (const auto &pt : e.points) mean += pt.unwrapped_p();
    mean /= static_cast<double>(e.points.size());
    double var = 0.0;
    for (const auto &pt : e.points) {
        const double d = pt.unwrapped_p() - mean;
        var += d * d;
    }
    return std::sqrt(var / static_cast<double>(e.points.size()));
}

}  // namespace qphase
