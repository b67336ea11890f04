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

#include "qphase/imageio.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qphase/error.hpp"

namespace qphase {
namespace {

class PgmReader {
  public:
    explicit PgmReader(std::string_view bytes) : bytes_(bytes) {}

    std::size_t pos() const noexcept { return pos_; }

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const char c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                return;
            }
        }
    }

    unsigned long read_uint(const char *what) {
        skip_space_and_comments();
        const std::size_t start = pos_;
        unsigned long value = 0;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            value = value * 10 + static_cast<unsigned long>(bytes_[pos_] - '0');
            if (value > 1'000'000'000UL) throw ParseError(std::string(what) + " is too large", start);
            ++pos_;
        }
        if (pos_ == start) {
            if (pos_ >= bytes_.size()) throw ParseError(std::string("unexpected end of data reading ") + what, pos_);
            throw ParseError(std::string("expected ") + what, pos_);
        }
        return value;
    }

    void expect_single_whitespace() {
        if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
            throw ParseError("expected whitespace after header", pos_);
        }
        ++pos_;
    }

    std::string_view rest() const { return bytes_.substr(pos_); }

  private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

GrayImage parse_pgm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
        throw ParseError("not a P2/P5 PGM file", 0);
    }
    const bool binary = bytes[1] == '5';
    PgmReader in(bytes.substr(2));
    const std::size_t base = 2;

    GrayImage img;
    std::size_t at = base + in.pos();
    img.width = in.read_uint("width");
    img.height = in.read_uint("height");
    at = base + in.pos();
    const unsigned long maxval = in.read_uint("maxval");
    if (img.width == 0 || img.height == 0) throw ParseError("image has zero size", at);
    if (maxval == 0 || maxval > 255) {
        throw ParseError("unsupported maxval " + std::to_string(maxval) + " (need 1..255)", at);
    }
    img.maxval = static_cast<unsigned>(maxval);
    const std::size_t count = img.width * img.height;
    img.pixels.resize(count);

    if (binary) {
        in.expect_single_whitespace();
        const auto payload = in.rest();
        if (payload.size() < count) {
            throw ParseError("truncated payload: expected " + std::to_string(count) + " bytes, got " +
                                 std::to_string(payload.size()),
                             base + in.pos() + payload.size());
        }
        for (std::size_t i = 0; i < count; ++i) {
            const auto v = static_cast<std::uint8_t>(payload[i]);
            if (v > img.maxval) throw ParseError("pixel exceeds maxval", base + in.pos() + i);
            img.pixels[i] = v;
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            in.skip_space_and_comments();
            const std::size_t off = base + in.pos();
            if (in.rest().empty()) {
                throw ParseError("truncated payload: expected " + std::to_string(count) + " samples, got " +
                                     std::to_string(i),
                                 off);
            }
            const unsigned long v = in.read_uint("pixel value");
            if (v > img.maxval) throw ParseError("pixel exceeds maxval", off);
            img.pixels[i] = static_cast<std::uint8_t>(v);
        }
    }
    return img;
}

GrayImage load_pgm(const std::filesystem::path &path) { return parse_pgm(read_text_file(path)); }

std::string encode_pgm(const GrayImage &image) {
    if (image.pixels.size() != image.width * image.height) {
        fail(ErrorCategory::invalid_dimension, "pixel count does not match width x height");
    }
    std::string out = "P5\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n" +
                      std::to_string(image.maxval) + "\n";
    out.append(reinterpret_cast<const char *>(image.pixels.data()), image.pixels.size());
    return out;
}

void save_pgm(const GrayImage &image, const std::filesystem::path &path) {
    write_text_file(path, encode_pgm(image));
}

Grid2D<double> image_to_grid(const GrayImage &image) {
    Grid2D<double> g(image.height, image.width);
    for (std::size_t i = 0; i < image.pixels.size(); ++i) g.data()[i] = image.pixels[i];
    return g;
}

ImageAmplitudes encode_wavefunction(const GrayImage &image) {
    double sum = 0.0;
    for (auto p : image.pixels) sum += static_cast<double>(p) * p;
    if (sum == 0.0) fail(ErrorCategory::degenerate_input, "cannot encode an all-black image");
    const double norm = std::sqrt(sum);
    ImageAmplitudes out{image_to_grid(image), norm};
    for (double &v : out.a.data()) v /= norm;
    return out;
}

GrayImage heatmap(const Grid2D<double> &grid, bool signed_scale) {
    double m = 0.0;
    for (double v : grid.data()) {
        if (!std::isfinite(v)) fail(ErrorCategory::invalid_data, "heatmap input contains NaN or Inf");
        m = std::max(m, signed_scale ? std::abs(v) : v);
    }
    GrayImage img{grid.cols(), grid.rows(), 255, std::vector<std::uint8_t>(grid.size())};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = grid.data()[i];
        long level;
        if (signed_scale) {
            if (m == 0.0) {
                level = 128;
            } else if (v >= 0.0) {
                level = 128 + std::lround(127.0 * v / m);
            } else {
                level = 128 - std::lround(128.0 * -v / m);
            }
        } else {
            level = m > 0.0 ? std::lround(255.0 * std::max(v, 0.0) / m) : 0;
        }
        img.pixels[i] = static_cast<std::uint8_t>(std::clamp(level, 0L, 255L));
    }
    return img;
}

void render_heatmap(const Grid2D<double> &grid, bool signed_scale, const std::filesystem::path &path) {
    save_pgm(heatmap(grid, signed_scale), path);
}

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string grid_csv(const Grid2D<double> &grid, const std::array<std::string, 3> &header) {
    std::string out = header[0] + "," + header[1] + "," + header[2] + "\n";
    for (std::size_t r = 0; r < grid.rows(); ++r) {
        for (std::size_t c = 0; c < grid.cols(); ++c) {
            out += std::to_string(r);
            out += ',';
            out += std::to_string(c);
            out += ',';
            out += format_double(grid(r, c));
            out += '\n';
        }
    }
    return out;
}

void write_grid_csv(const Grid2D<double> &grid, const std::filesystem::path &path,
                    const std::array<std::string, 3> &header) {
    write_text_file(path, grid_csv(grid, header));
}

std::string counts_csv(const MeasurementRecord &record) {
    std::string out = "outcome,count\n";
    for (const auto &[k, c] : record.counts) out += std::to_string(k) + "," + std::to_string(c) + "\n";
    return out;
}

void write_text_file(const std::filesystem::path &path, std::string_view contents) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) fail(ErrorCategory::io, "cannot open " + path.string() + " for writing");
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!f) fail(ErrorCategory::io, "write failed for " + path.string());
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(ErrorCategory::io, "cannot open " + path.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace qphase
