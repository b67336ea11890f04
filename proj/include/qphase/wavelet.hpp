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
#include <vector>

#include "qphase/grid.hpp"

namespace qphase {

/// Coefficients of a periodic 4-tap Daubechies transform.
///
/// Layout follows the pyramid: after each level the approximation band
/// occupies the leading half of the active region and the detail band the
/// trailing half (in 2D, the top-left quadrant holds the approximation). 1D
/// coefficients are stored as a single row.
struct WaveletCoeffs {
    Grid2D<double> values;
    int levels = 0;
    /// 0 for an untiled transform, else the tile side length.
    std::size_t tile_size = 0;
    bool one_dimensional = false;
};

/// Depth that leaves a 4-sample (4 x 4) approximation band; at least 1.
int full_depth(std::size_t length);

WaveletCoeffs d4_forward_1d(std::span<const double> signal, std::optional<int> levels = std::nullopt);
std::vector<double> d4_inverse_1d(const WaveletCoeffs &coeffs);

WaveletCoeffs d4_forward_2d(const Grid2D<double> &field, std::optional<int> levels = std::nullopt);
Grid2D<double> d4_inverse_2d(const WaveletCoeffs &coeffs);

/// Full-depth transform inside each tile_size x tile_size tile.
WaveletCoeffs tiled_forward_2d(const Grid2D<double> &field, std::size_t tile_size);
Grid2D<double> tiled_inverse_2d(const WaveletCoeffs &coeffs);

/// Dispatches on `coeffs.tile_size` / `one_dimensional`.
Grid2D<double> inverse_transform(const WaveletCoeffs &coeffs);

}  // namespace qphase
