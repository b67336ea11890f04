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

#include "qphase/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "qphase/error.hpp"
#include "qphase/log.hpp"
#include "qphase/rng.hpp"

namespace qphase {

std::uint64_t MeasurementRecord::count(std::size_t outcome) const {
    auto it = counts.find(outcome);
    return it == counts.end() ? 0 : it->second;
}

std::vector<double> MeasurementRecord::frequencies(std::size_t outcomes) const {
    std::vector<double> f(outcomes, 0.0);
    if (shots == 0) return f;
    for (const auto &[k, c] : counts) {
        if (k < outcomes) f[k] = static_cast<double>(c) / static_cast<double>(shots);
    }
    return f;
}

MeasurementRecord sample_distribution(std::span<const double> probabilities, std::uint64_t shots,
                                      std::uint64_t seed) {
    if (shots == 0) fail(ErrorCategory::invalid_parameter, "shots must be >= 1");
    if (probabilities.empty()) fail(ErrorCategory::invalid_dimension, "empty distribution");
    std::vector<double> cdf(probabilities.size());
    double total = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        if (!(probabilities[i] >= 0.0) || !std::isfinite(probabilities[i])) {
            fail(ErrorCategory::invalid_parameter, "probabilities must be finite and nonnegative");
        }
        total += probabilities[i];
        cdf[i] = total;
    }
    if (!(total > 0.0)) fail(ErrorCategory::degenerate_input, "distribution has zero mass");

    // The last outcome with nonzero mass absorbs rounding at the top of the CDF.
    std::size_t last = probabilities.size() - 1;
    while (probabilities[last] == 0.0) --last;

    MeasurementRecord rec{{}, shots, seed};
    Rng rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * total;
        auto idx = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        idx = std::min(idx, last);
        ++rec.counts[idx];
    }
    return rec;
}

MeasurementRecord sample_computational(const StateVector &state, std::uint64_t shots, std::uint64_t seed) {
    return sample_distribution(state.probabilities(), shots, seed);
}

std::vector<double> coarse_grained_probabilities(std::span<const double> probabilities, std::size_t rows,
                                                 std::size_t cols, int n_f) {
    if (!is_power_of_two(rows) || !is_power_of_two(cols) || rows * cols != probabilities.size()) {
        fail(ErrorCategory::invalid_dimension, "coarse graining needs a power-of-two grid matching the state");
    }
    const int rq = exact_log2(rows);
    const int cq = exact_log2(cols);
    if (n_f < 0 || n_f > std::min(rq, cq)) {
        fail(ErrorCategory::invalid_parameter,
             "n_f must lie in [0, " + std::to_string(std::min(rq, cq)) + "], got " + std::to_string(n_f));
    }
    const std::size_t side = std::size_t{1} << n_f;
    std::vector<double> cells(side * side, 0.0);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t cr = r >> (rq - n_f);
        for (std::size_t c = 0; c < cols; ++c) {
            cells[cr * side + (c >> (cq - n_f))] += probabilities[r * cols + c];
        }
    }
    return cells;
}

MeasurementRecord coarse_grained_sample(const StateVector &state, std::size_t rows, std::size_t cols, int n_f,
                                        std::uint64_t shots, std::uint64_t seed) {
    const auto probs = state.probabilities();
    return sample_distribution(coarse_grained_probabilities(probs, rows, cols, n_f), shots, seed);
}

TomographyEstimate ancilla_tomography_sample(double w, std::size_t N, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) fail(ErrorCategory::invalid_parameter, "shots must be >= 1");
    if (N == 0) fail(ErrorCategory::invalid_dimension, "N must be positive");
    const double two_n = 2.0 * static_cast<double>(N);
    const double mean = two_n * w;
    if (!std::isfinite(mean) || std::abs(mean) > 1.0 + 1e-12) {
        fail(ErrorCategory::invalid_parameter, "|2 N w| exceeds 1: not a physical Wigner value");
    }
    const double p_plus = 0.5 * (1.0 + std::clamp(mean, -1.0, 1.0));
    Rng rng(seed);
    std::uint64_t plus = 0;
    for (std::uint64_t s = 0; s < shots; ++s) {
        if (rng.uniform() < p_plus) ++plus;
    }
    const double n = static_cast<double>(shots);
    const double sample_mean = (2.0 * static_cast<double>(plus) - n) / n;
    // Population variance of +-1 readings; Bessel correction when possible.
    double var = 1.0 - sample_mean * sample_mean;
    if (shots > 1) var *= n / (n - 1.0);
    var = std::max(var, 0.0);
    return {sample_mean / two_n, std::sqrt(var) / (two_n * std::sqrt(n))};
}

std::uint64_t shots_to_resolve(double w, std::size_t N, std::uint64_t seed, std::uint64_t min_shots,
                               std::uint64_t max_shots) {
    if (w == 0.0) fail(ErrorCategory::invalid_parameter, "cannot resolve w = 0");
    const double target = std::abs(w);
    double ladder = static_cast<double>(std::max<std::uint64_t>(min_shots, 2));
    const double step = std::pow(2.0, 0.25);
    Rng streams(seed);
    for (std::uint64_t attempt = 0;; ++attempt) {
        const auto shots = std::min(max_shots, static_cast<std::uint64_t>(std::llround(ladder)));
        const auto est = ancilla_tomography_sample(w, N, shots, streams.split(attempt).seed());
        if (est.standard_error <= target || shots >= max_shots) return shots;
        ladder *= step;
    }
}

int optimal_iterations(double weight) {
    if (!(weight > 0.0) || weight > 1.0) fail(ErrorCategory::invalid_parameter, "weight must lie in (0, 1]");
    const double theta = std::asin(std::sqrt(weight));
    // Exact Grover angles (a = 1/4 gives 1.0) must not round down.
    return std::max(0, static_cast<int>(std::floor(std::numbers::pi / (4.0 * theta) - 0.5 + 1e-9)));
}

double amplified_weight(double weight, int iterations) {
    const double s = std::sin((2.0 * iterations + 1.0) * std::asin(std::sqrt(weight)));
    return s * s;
}

AmplifyReport amplitude_amplify(const StateVector &state, const IndexPredicate &region,
                                std::optional<int> iterations) {
    const auto &psi0 = state.vector();
    const std::size_t N = psi0.size();
    std::vector<char> in_region(N);
    double a = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        in_region[i] = region(i) ? 1 : 0;
        if (in_region[i]) a += std::norm(psi0[i]);
    }
    const double total = state.norm_squared();
    a /= total;
    if (a <= 0.0) fail(ErrorCategory::empty_region, "region has zero weight");
    if (iterations && *iterations < 0) fail(ErrorCategory::invalid_parameter, "iterations must be >= 0");
    if (a >= 1.0 - 1e-15) {
        log_warning("amplitude amplification: region already carries the full weight; nothing to do");
        return {0, 1.0, 1.0, state};
    }
    const int m = iterations.value_or(optimal_iterations(a));

    // Extended precision keeps the in-region ratios fixed over many rounds.
    using lcplx = std::complex<long double>;
    std::vector<lcplx> ref(N), psi(N);
    for (std::size_t i = 0; i < N; ++i) ref[i] = psi[i] = lcplx(psi0[i].real(), psi0[i].imag());
    const long double inv_total = 1.0L / static_cast<long double>(total);
    for (int it = 0; it < m; ++it) {
        // I - 2P
        for (std::size_t i = 0; i < N; ++i) {
            if (in_region[i]) psi[i] = -psi[i];
        }
        // I - 2|psi0><psi0|
        lcplx overlap{0.0L, 0.0L};
        for (std::size_t i = 0; i < N; ++i) overlap += std::conj(ref[i]) * psi[i];
        overlap *= 2.0L * inv_total;
        for (std::size_t i = 0; i < N; ++i) psi[i] -= overlap * ref[i];
    }
    std::vector<cplx> out(N);
    double w = 0.0, norm = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = cplx(static_cast<double>(psi[i].real()), static_cast<double>(psi[i].imag()));
        const double p = std::norm(out[i]);
        norm += p;
        if (in_region[i]) w += p;
    }
    return {m, a, w / norm, StateVector::unchecked(std::move(out))};
}

namespace {

double l2_distance(const Grid2D<double> &a, const Grid2D<double> &b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a.data()[i] - b.data()[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double default_gray_scale(const Grid2D<double> &reference) {
    double m = 0.0;
    for (double v : reference.data()) m = std::max(m, std::abs(v));
    if (!(m > 0.0)) fail(ErrorCategory::degenerate_input, "reference field is identically zero");
    return 255.0 / m;
}

void check_same_shape(const Grid2D<double> &a, const Grid2D<double> &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        fail(ErrorCategory::invalid_dimension, "reconstruction and reference differ in shape");
    }
}

}  // namespace

double psnr(const Grid2D<double> &reference, const Grid2D<double> &field, double gray_scale) {
    check_same_shape(reference, field);
    double mse = 0.0;
    for (std::size_t i = 0; i < field.size(); ++i) {
        const double r = std::clamp(reference.data()[i] * gray_scale, 0.0, 255.0);
        const double f = std::clamp(field.data()[i] * gray_scale, 0.0, 255.0);
        mse += (r - f) * (r - f);
    }
    mse /= static_cast<double>(field.size());
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

Reconstruction topk_reconstruct(const WaveletCoeffs &coeffs, std::size_t k, const Grid2D<double> &reference,
                                std::optional<double> gray_scale) {
    const std::size_t total = coeffs.values.size();
    if (k < 1 || k > total) {
        fail(ErrorCategory::invalid_parameter,
             "k must lie in [1, " + std::to_string(total) + "], got " + std::to_string(k));
    }
    const auto values = coeffs.values.data();
    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                      [&](std::size_t a, std::size_t b) {
                          const double x = std::abs(values[a]), y = std::abs(values[b]);
                          return x != y ? x > y : a < b;
                      });
    WaveletCoeffs kept = coeffs;
    std::fill(kept.values.storage().begin(), kept.values.storage().end(), 0.0);
    for (std::size_t i = 0; i < k; ++i) kept.values.data()[order[i]] = values[order[i]];

    Reconstruction out{inverse_transform(kept), 0.0, 0.0};
    check_same_shape(reference, out.field);
    out.l2_error = l2_distance(out.field, reference);
    out.psnr = psnr(reference, out.field, gray_scale.value_or(default_gray_scale(reference)));
    return out;
}

Reconstruction monte_carlo_reconstruct(const Grid2D<double> &amplitudes, std::uint64_t samples,
                                       std::uint64_t seed, std::optional<double> gray_scale) {
    std::vector<double> probs(amplitudes.size());
    for (std::size_t i = 0; i < probs.size(); ++i) probs[i] = amplitudes.data()[i] * amplitudes.data()[i];
    const auto rec = sample_distribution(probs, samples, seed);
    Grid2D<double> field(amplitudes.rows(), amplitudes.cols(), 0.0);
    for (const auto &[idx, c] : rec.counts) {
        field.data()[idx] = std::sqrt(static_cast<double>(c) / static_cast<double>(samples));
    }
    Reconstruction out{std::move(field), 0.0, 0.0};
    out.l2_error = l2_distance(out.field, amplitudes);
    out.psnr = psnr(amplitudes, out.field, gray_scale.value_or(default_gray_scale(amplitudes)));
    return out;
}

}  // namespace qphase
