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

#include "qphase/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qphase/error.hpp"
#include "qphase/log.hpp"
#include "qphase/wavelet.hpp"

namespace qphase {

double ipr(std::span<const double> weights) {
    double s1 = 0.0, s2 = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) fail(ErrorCategory::invalid_parameter, "IPR weights must be finite and >= 0");
        s1 += w;
        s2 += w * w;
    }
    if (!(s1 > 0.0)) fail(ErrorCategory::degenerate_input, "IPR of an all-zero weight vector");
    return s1 * s1 / s2;
}

double entropy(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0 || !std::isfinite(w)) fail(ErrorCategory::invalid_parameter, "entropy weights must be finite and >= 0");
        total += w;
    }
    if (!(total > 0.0)) fail(ErrorCategory::degenerate_input, "entropy of an all-zero weight vector");
    if (std::abs(total - 1.0) > 1e-8) {
        log_warning("entropy: weights sum to " + std::to_string(total) + "; renormalizing");
    }
    double s = 0.0;
    for (double w : weights) {
        if (w > 0.0) {
            const double p = w / total;
            s -= p * std::log2(p);
        }
    }
    return std::max(s, 0.0);
}

double ipr_ratio(double raw_ipr, double wavelet_ipr) {
    if (!(wavelet_ipr > 0.0)) fail(ErrorCategory::invalid_parameter, "wavelet IPR must be > 0");
    return raw_ipr / wavelet_ipr;
}

ScalingFit fit_scaling(std::span<const std::pair<int, double>> points) {
    if (points.size() < 3) {
        fail(ErrorCategory::insufficient_data,
             "scaling fit needs at least 3 points, got " + std::to_string(points.size()));
    }
    const double n = static_cast<double>(points.size());
    double mx = 0.0, my = 0.0;
    ScalingFit fit;
    fit.nq_min = points.front().first;
    fit.nq_max = points.front().first;
    for (const auto &[nq, xi] : points) {
        if (!(xi > 0.0)) fail(ErrorCategory::invalid_parameter, "scaling fit needs xi > 0");
        mx += nq;
        my += std::log2(xi);
        fit.nq_min = std::min(fit.nq_min, nq);
        fit.nq_max = std::max(fit.nq_max, nq);
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto &[nq, xi] : points) {
        const double dx = nq - mx;
        sxx += dx * dx;
        sxy += dx * (std::log2(xi) - my);
    }
    if (sxx == 0.0) fail(ErrorCategory::insufficient_data, "scaling fit needs at least two distinct n_q");
    fit.exponent = sxy / sxx;
    fit.intercept = my - fit.exponent * mx;
    double ssr = 0.0;
    for (const auto &[nq, xi] : points) {
        const double r = std::log2(xi) - (fit.intercept + fit.exponent * nq);
        ssr += r * r;
    }
    fit.standard_error = points.size() > 2 ? std::sqrt(ssr / (n - 2.0) / sxx) : 0.0;
    return fit;
}

IprEntropy ipr_entropy_compare(std::span<const double> weights) {
    return {ipr(weights), std::exp2(entropy(weights))};
}

std::vector<double> squared(std::span<const double> values) {
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] * values[i];
    return out;
}

double wigner_wavelet_ipr(const WignerGrid &grid) {
    const auto coeffs = d4_forward_2d(grid.materialize());
    return wigner_ipr(coeffs.values.data(), grid.dimension());
}

double husimi_ipr(const HusimiGrid &h) {
    const auto p = h.probabilities();
    return ipr(p.data());
}

double husimi_wavelet_ipr(const HusimiGrid &h) {
    const auto coeffs = d4_forward_2d(h.moduli());
    return ipr(squared(coeffs.values.data()));
}

}  // namespace qphase
