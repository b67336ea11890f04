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

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qphase/grid.hpp"
#include "qphase/husimi.hpp"
#include "qphase/wigner.hpp"

namespace qphase {

/// (sum w)^2 / sum w^2; 1/sum w^2 for normalized weights.
double ipr(std::span<const double> weights);

/// Shannon entropy in bits. Weights are renormalized (with a warning when the
/// sum is off by more than 1e-8); zero entries contribute nothing.
double entropy(std::span<const double> weights);

double ipr_ratio(double raw_ipr, double wavelet_ipr);

struct ScalingFit {
    /// Slope of log2(xi) against n_q, i.e. alpha in xi ~ N^alpha.
    double exponent = 0.0;
    double intercept = 0.0;
    double standard_error = 0.0;
    int nq_min = 0;
    int nq_max = 0;
};

/// Ordinary least squares of log2(xi) on n_q.
ScalingFit fit_scaling(std::span<const std::pair<int, double>> points);

struct IprEntropy {
    double ipr = 0.0;
    /// 2^S
    double entropy_count = 0.0;
};

IprEntropy ipr_entropy_compare(std::span<const double> weights);

/// Squares of `values`.
std::vector<double> squared(std::span<const double> values);

/// Wigner IPR of the full-depth D4 transform of the 2N x 2N grid.
double wigner_wavelet_ipr(const WignerGrid &grid);

/// 1 / sum |H|^4.
double husimi_ipr(const HusimiGrid &h);
/// 1 / sum c^4 with c the full-depth D4 transform of |H|.
double husimi_wavelet_ipr(const HusimiGrid &h);

}  // namespace qphase
