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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qphase/analysis.hpp"
#include "qphase/synthetic.hpp"

namespace qphase {

/// One (distribution, K, n_q) cell. S and S_wavelet are Shannon entropies of
/// the normalized squared values before and after the wavelet transform.
struct ScanRow {
    double K = 0.0;
    int n_q = 0;
    double xi_raw = 0.0;
    double xi_wavelet = 0.0;
    double R = 0.0;
    double S = 0.0;
    double S_wavelet = 0.0;
};

struct ScanFits {
    ScalingFit raw;
    ScalingFit wavelet;
    ScalingFit ratio;
    ScalingFit entropy_raw;
    ScalingFit entropy_wavelet;
};

/// Band state evolved for t kicks, Wigner grid and its full 2D D4 transform.
ScanRow wigner_cell(double K, int n_q, int t);
/// Modified Husimi of the evolved band state; n_q must be even.
ScanRow husimi_cell(double K, int n_q, int t);
/// Image with side 2^n_q. tile = 0 transforms the whole image, otherwise the
/// tile side (a power of two >= 4).
ScanRow image_cell(const GrayImage &image, int n_q, std::size_t tile);

/// Cells run in parallel; rows come back sorted by n_q.
std::vector<ScanRow> scan_wigner(double K, const std::vector<int> &nq_values, int t);
std::vector<ScanRow> scan_husimi(double K, const std::vector<int> &nq_values, int t);
/// tile = 0 for the full transform; nullopt tiles each image by 2^ceil(n_q/2).
std::vector<ScanRow> scan_image(SyntheticKind kind, const std::vector<int> &nq_values,
                                std::optional<std::size_t> tile, std::uint64_t seed = kDefaultImageSeed);

/// Tile side used for an image at resolution 2^n_q when none is given.
std::size_t default_tile(int n_q);

/// Fits over rows with n_q in [range.first, range.second] (all rows if unset).
/// Entropy fits use 2^S as the component count.
ScanFits fit_scan(const std::vector<ScanRow> &rows, std::optional<std::pair<int, int>> range = std::nullopt);

std::string scan_csv(const std::vector<ScanRow> &rows);

}  // namespace qphase
