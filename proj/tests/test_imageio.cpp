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

#include <gtest/gtest.h>

#include <filesystem>
#include <algorithm>
#include <limits>

#include "qphase/imageio.hpp"
#include "qphase/synthetic.hpp"
#include "test_util.hpp"

using namespace qphase;

namespace {

std::filesystem::path temp_file(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("qphase_test_" + name);
}

std::string p5(const std::string &header, std::initializer_list<int> bytes) {
    std::string s = header;
    for (int b : bytes) s.push_back(static_cast<char>(b));
    return s;
}

}  // namespace

TEST(imageio, parses_binary_fixture) {
    const auto img = parse_pgm(p5("P5\n2 2\n255\n", {0, 255, 128, 64}));
    EXPECT_EQ(img.width, 2u);
    EXPECT_EQ(img.height, 2u);
    EXPECT_EQ(img.pixels, (std::vector<std::uint8_t>{0, 255, 128, 64}));
    EXPECT_EQ(img.at(1, 0), 255);
    EXPECT_EQ(img.at(0, 1), 128);
}

TEST(imageio, parses_ascii_with_comments) {
    const auto img = parse_pgm("P2\n# a comment\n3 1 # trailing\n15\n0 7\n15\n");
    EXPECT_EQ(img.maxval, 15u);
    EXPECT_EQ(img.pixels, (std::vector<std::uint8_t>{0, 7, 15}));
}

TEST(imageio, file_round_trip_keeps_payload) {
    const auto img = synthetic_image(SyntheticKind::fractal, 32);
    const auto path = temp_file("roundtrip.pgm");
    save_pgm(img, path);
    EXPECT_EQ(load_pgm(path), img);
    const auto ascii = parse_pgm("P2 2 2 100 1 2 3 100");
    EXPECT_EQ(parse_pgm(encode_pgm(ascii)), ascii);
    std::filesystem::remove(path);
}

TEST(imageio, truncated_payload_reports_counts_and_offset) {
    try {
        parse_pgm(p5("P5\n4 4\n255\n", {1, 2, 3}));
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("expected 16"), std::string::npos) << msg;
        EXPECT_NE(msg.find("got 3"), std::string::npos) << msg;
        EXPECT_EQ(e.offset(), 14u);  // end of input
        EXPECT_EQ(e.category(), ErrorCategory::parse);
    }
}

TEST(imageio, malformed_headers_are_parse_errors) {
    EXPECT_QPHASE_ERROR(parse_pgm("P6\n1 1\n255\n\x01"), parse);
    EXPECT_QPHASE_ERROR(parse_pgm("P5\n1 x\n255\n\x01"), parse);
    EXPECT_QPHASE_ERROR(parse_pgm("P5\n1 1\n65535\n\x01\x01"), parse);
    EXPECT_QPHASE_ERROR(parse_pgm("P2\n2 1\n10\n3 11\n"), parse);
    EXPECT_QPHASE_ERROR(parse_pgm("P2\n2 2\n10\n3 4 5"), parse);
    EXPECT_QPHASE_ERROR(load_pgm(temp_file("does_not_exist.pgm")), io);
}

TEST(imageio, encode_uniform_and_delta_images) {
    GrayImage flat{4, 4, 255, std::vector<std::uint8_t>(16, 77)};
    const auto a = encode_wavefunction(flat);
    for (double v : a.a.data()) EXPECT_NEAR(v, 0.25, 1e-15);
    GrayImage delta{4, 4, 255, std::vector<std::uint8_t>(16, 0)};
    delta.pixels[6] = 255;
    const auto d = encode_wavefunction(delta);
    EXPECT_DOUBLE_EQ(d.a.data()[6], 1.0);
    EXPECT_DOUBLE_EQ(d.pixel_norm, 255.0);
    GrayImage black{4, 4, 255, std::vector<std::uint8_t>(16, 0)};
    EXPECT_QPHASE_ERROR(encode_wavefunction(black), degenerate_input);
}

TEST(imageio, corpus_encodings_are_normalized) {
    for (const auto &[name, img] : synthetic_corpus(128)) {
        const auto a = encode_wavefunction(img);
        long double s = 0;
        for (double v : a.a.data()) {
            EXPECT_GE(v, 0.0);
            s += static_cast<long double>(v) * v;
        }
        EXPECT_NEAR(static_cast<double>(s), 1.0, 1e-12) << name;
    }
}

TEST(imageio, encode_then_quantize_recovers_pixels) {
    const auto img = synthetic_image(SyntheticKind::portrait, 64);
    const auto a = encode_wavefunction(img);
    const auto q = heatmap(a.a, false);
    const double max_pixel = *std::max_element(img.pixels.begin(), img.pixels.end());
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        EXPECT_LE(std::abs(q.pixels[i] - img.pixels[i] * 255.0 / max_pixel), 1.0);
    }
}

TEST(imageio, signed_heatmap_levels) {
    EXPECT_EQ(heatmap(Grid2D<double>(2, 3, 0.0), true).pixels, std::vector<std::uint8_t>(6, 128));
    const auto two = heatmap(Grid2D<double>(1, 2, std::vector<double>{-3.0, 3.0}), true);
    EXPECT_EQ(two.pixels, (std::vector<std::uint8_t>{0, 255}));
    const auto un = heatmap(Grid2D<double>(1, 3, std::vector<double>{0.0, 1.0, 2.0}), false);
    EXPECT_EQ(un.pixels, (std::vector<std::uint8_t>{0, 128, 255}));
}

TEST(imageio, heatmap_is_monotone) {
    std::vector<double> v;
    for (int i = -100; i <= 100; ++i) v.push_back(i * 0.013);
    for (bool sgn : {true, false}) {
        const auto h = heatmap(Grid2D<double>(1, v.size(), v), sgn);
        for (std::size_t i = 1; i < v.size(); ++i) EXPECT_GE(h.pixels[i], h.pixels[i - 1]);
    }
}

TEST(imageio, heatmap_rejects_non_finite) {
    Grid2D<double> g(1, 2, std::vector<double>{1.0, std::numeric_limits<double>::quiet_NaN()});
    EXPECT_QPHASE_ERROR(heatmap(g, true), invalid_data);
    g(0, 1) = std::numeric_limits<double>::infinity();
    EXPECT_QPHASE_ERROR(heatmap(g, false), invalid_data);
}

TEST(imageio, csv_uses_seventeen_digits) {
    Grid2D<double> g(1, 2, std::vector<double>{0.1, -2.0 / 3.0});
    EXPECT_EQ(grid_csv(g), "row,col,value\n0,0,0.10000000000000001\n0,1,-0.66666666666666663\n");
    MeasurementRecord rec{{{3, 2}, {1, 5}}, 7, 0};
    EXPECT_EQ(counts_csv(rec), "outcome,count\n1,5\n3,2\n");
}
