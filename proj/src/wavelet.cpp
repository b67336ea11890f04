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

#include "qphase/wavelet.hpp"

#include <string>

#include "qphase/error.hpp"
#include "qphase/kernels.hpp"
#include "qphase/statevec.hpp"

namespace qphase {
namespace {

int validate_levels(std::size_t length, std::optional<int> levels) {
    if (!is_power_of_two(length) || length < 4) {
        fail(ErrorCategory::invalid_dimension,
             "wavelet length " + std::to_string(length) + " must be a power of two >= 4");
    }
    const int max_levels = exact_log2(length) - 1;
    const int chosen = levels.value_or(full_depth(length));
    if (chosen < 1 || chosen > max_levels) {
        fail(ErrorCategory::invalid_dimension, "wavelet levels " + std::to_string(chosen) +
                                                   " outside [1, " + std::to_string(max_levels) + "]");
    }
    return chosen;
}

void require_square(const Grid2D<double> &field) {
    if (field.rows() != field.cols()) {
        fail(ErrorCategory::invalid_dimension, "2D wavelet transform needs a square field");
    }
}

}  // namespace

int full_depth(std::size_t length) {
    const int d = exact_log2(length) - 2;
    return d < 1 ? 1 : d;
}

WaveletCoeffs d4_forward_1d(std::span<const double> signal, std::optional<int> levels) {
    const int depth = validate_levels(signal.size(), levels);
    WaveletCoeffs out{Grid2D<double>(1, signal.size(), std::vector<double>(signal.begin(), signal.end())),
                      depth, 0, true};
    std::vector<double> scratch(signal.size());
    for (int lev = 0; lev < depth; ++lev) {
        kernels::d4_level(out.values.data(), signal.size() >> lev, false, scratch);
    }
    return out;
}

std::vector<double> d4_inverse_1d(const WaveletCoeffs &coeffs) {
    const std::size_t n = coeffs.values.size();
    validate_levels(n, coeffs.levels);
    std::vector<double> x(coeffs.values.data().begin(), coeffs.values.data().end());
    std::vector<double> scratch(n);
    for (int lev = coeffs.levels - 1; lev >= 0; --lev) kernels::d4_level(x, n >> lev, true, scratch);
    return x;
}

WaveletCoeffs d4_forward_2d(const Grid2D<double> &field, std::optional<int> levels) {
    require_square(field);
    const int depth = validate_levels(field.rows(), levels);
    WaveletCoeffs out{field, depth, 0, false};
    kernels::d4_square(out.values, 0, 0, field.rows(), depth, false);
    return out;
}

Grid2D<double> d4_inverse_2d(const WaveletCoeffs &coeffs) {
    require_square(coeffs.values);
    validate_levels(coeffs.values.rows(), coeffs.levels);
    Grid2D<double> field = coeffs.values;
    kernels::d4_square(field, 0, 0, field.rows(), coeffs.levels, true);
    return field;
}

WaveletCoeffs tiled_forward_2d(const Grid2D<double> &field, std::size_t tile_size) {
    require_square(field);
    if (!is_power_of_two(tile_size) || tile_size < 4 || field.rows() % tile_size != 0) {
        fail(ErrorCategory::invalid_dimension, "tile size " + std::to_string(tile_size) +
                                                   " must be a power of two >= 4 dividing " +
                                                   std::to_string(field.rows()));
    }
    const int depth = full_depth(tile_size);
    WaveletCoeffs out{field, depth, tile_size, false};
    kernels::d4_tiles(out.values, tile_size, depth, false);
    return out;
}

Grid2D<double> tiled_inverse_2d(const WaveletCoeffs &coeffs) {
    if (coeffs.tile_size == 0) return d4_inverse_2d(coeffs);
    require_square(coeffs.values);
    if (!is_power_of_two(coeffs.tile_size) || coeffs.tile_size < 4 ||
        coeffs.values.rows() % coeffs.tile_size != 0) {
        fail(ErrorCategory::invalid_dimension, "invalid tile size in coefficients");
    }
    Grid2D<double> field = coeffs.values;
    kernels::d4_tiles(field, coeffs.tile_size, coeffs.levels, true);
    return field;
}

Grid2D<double> inverse_transform(const WaveletCoeffs &coeffs) {
    if (coeffs.one_dimensional) {
        auto x = d4_inverse_1d(coeffs);
        const std::size_t n = x.size();
        return Grid2D<double>(1, n, std::move(x));
    }
    return coeffs.tile_size == 0 ? d4_inverse_2d(coeffs) : tiled_inverse_2d(coeffs);
}

}  // namespace qphase
