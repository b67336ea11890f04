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

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qphase/grid.hpp"
#include "qphase/measurement.hpp"

namespace qphase {

/// 8-bit grayscale image, row-major (y * width + x).
struct GrayImage {
    std::size_t width = 0;
    std::size_t height = 0;
    unsigned maxval = 255;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(std::size_t x, std::size_t y) const { return pixels[y * width + x]; }
    bool operator==(const GrayImage &) const = default;
};

/// Accepts P2 and P5 with '#' comments and maxval <= 255.
GrayImage parse_pgm(std::string_view bytes);
GrayImage load_pgm(const std::filesystem::path &path);
/// Binary P5 with the image's maxval.
std::string encode_pgm(const GrayImage &image);
void save_pgm(const GrayImage &image, const std::filesystem::path &path);

/// Pixel values as doubles, rows = y.
Grid2D<double> image_to_grid(const GrayImage &image);

struct ImageAmplitudes {
    Grid2D<double> a;
    /// sqrt(sum pixel^2); a * pixel_norm recovers the pixels.
    double pixel_norm = 0.0;
};

ImageAmplitudes encode_wavefunction(const GrayImage &image);

/// Signed: [-m, m] onto [0, 255] with zero at 128, m = max |v|.
/// Unsigned: [0, max] onto [0, 255]; negative values clamp to 0.
GrayImage heatmap(const Grid2D<double> &grid, bool signed_scale);
void render_heatmap(const Grid2D<double> &grid, bool signed_scale, const std::filesystem::path &path);

/// One "row,col,value" line per cell with 17 significant digits.
std::string grid_csv(const Grid2D<double> &grid, const std::array<std::string, 3> &header = {"row", "col", "value"});
void write_grid_csv(const Grid2D<double> &grid, const std::filesystem::path &path,
                    const std::array<std::string, 3> &header = {"row", "col", "value"});

/// "outcome,count" lines in increasing outcome order.
std::string counts_csv(const MeasurementRecord &record);

void write_text_file(const std::filesystem::path &path, std::string_view contents);
std::string read_text_file(const std::filesystem::path &path);

/// printf "%.17g".
std::string format_double(double value);

}  // namespace qphase
