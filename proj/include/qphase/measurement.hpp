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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "qphase/grid.hpp"
#include "qphase/statevec.hpp"
#include "qphase/wavelet.hpp"

namespace qphase {

struct MeasurementRecord {
    std::map<std::size_t, std::uint64_t> counts;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;

    std::uint64_t count(std::size_t outcome) const;
    /// counts / shots, dense over `outcomes` entries.
    std::vector<double> frequencies(std::size_t outcomes) const;
};

/// Multinomial draws from `probabilities` (need not be normalized).
MeasurementRecord sample_distribution(std::span<const double> probabilities, std::uint64_t shots,
                                      std::uint64_t seed);

MeasurementRecord sample_computational(const StateVector &state, std::uint64_t shots, std::uint64_t seed);

/// Cell probabilities when only the leading n_f bits of the row and column
/// index are measured. Flat index = row * cols + col; cells are indexed
/// (row >> shift) * 2^n_f + (col >> shift).
std::vector<double> coarse_grained_probabilities(std::span<const double> probabilities, std::size_t rows,
                                                 std::size_t cols, int n_f);

MeasurementRecord coarse_grained_sample(const StateVector &state, std::size_t rows, std::size_t cols, int n_f,
                                        std::uint64_t shots, std::uint64_t seed);

struct TomographyEstimate {
    double estimate = 0.0;
    double standard_error = 0.0;
};

/// Simulates `shots` readings of a +-1 observable with mean 2 N w.
TomographyEstimate ancilla_tomography_sample(double w, std::size_t N, std::uint64_t shots, std::uint64_t seed);

/// Smallest shot count, on a 2^(1/4) geometric ladder starting at `min_shots`,
/// whose sampled stderr is at most |w|. Returns `max_shots` if never reached.
std::uint64_t shots_to_resolve(double w, std::size_t N, std::uint64_t seed, std::uint64_t min_shots = 4,
                               std::uint64_t max_shots = std::uint64_t{1} << 26);

struct AmplifyReport {
    int iterations = 0;
    double initial_weight = 0.0;
    double final_weight = 0.0;
    StateVector state;
};

using IndexPredicate = std::function<bool(std::size_t)>;

/// floor(pi / (4 asin sqrt(a)) - 1/2), never negative.
int optimal_iterations(double weight);
/// sin^2((2 m + 1) asin sqrt(a)).
double amplified_weight(double weight, int iterations);

/// Each round flips the sign on the region, then reflects about the input
/// state. `iterations` defaults to optimal_iterations.
AmplifyReport amplitude_amplify(const StateVector &state, const IndexPredicate &region,
                                std::optional<int> iterations = std::nullopt);

struct Reconstruction {
    Grid2D<double> field;
    double l2_error = 0.0;
    double psnr = 0.0;
};

/// PSNR with peak 255 after mapping unit-energy fields to gray levels by
/// `gray_scale` and clamping to [0, 255]. Infinite for identical fields.
double psnr(const Grid2D<double> &reference, const Grid2D<double> &field, double gray_scale);

/// Keeps the k largest |coefficients| (ties to the lowest flat index) and
/// inverts. `gray_scale` defaults to 255 / max(reference).
Reconstruction topk_reconstruct(const WaveletCoeffs &coeffs, std::size_t k, const Grid2D<double> &reference,
                                std::optional<double> gray_scale = std::nullopt);

/// Histogram of `samples` draws from a^2, returned as sqrt(count / samples).
Reconstruction monte_carlo_reconstruct(const Grid2D<double> &amplitudes, std::uint64_t samples,
                                       std::uint64_t seed, std::optional<double> gray_scale = std::nullopt);

}  // namespace qphase
