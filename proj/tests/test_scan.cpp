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

#include "qphase/analysis.hpp"
#include "qphase/rotator.hpp"
#include "qphase/scan.hpp"
#include "test_util.hpp"

using namespace qphase;

TEST(scan, rows_are_sorted_and_deduplicated) {
    const auto rows = scan_wigner(1.0, {6, 4, 5, 4}, 3);
    ASSERT_EQ(rows.size(), 3u);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].n_q, static_cast<int>(4 + i));
        EXPECT_DOUBLE_EQ(rows[i].K, 1.0);
    }
}

TEST(scan, wigner_cell_matches_direct_analysis) {
    const auto row = wigner_cell(0.5, 5, 10);
    const auto p = RotatorParams::standard(5, 0.5);
    const auto g = wigner_direct(to_angle_representation(evolve(initial_band_state(p), p, 10)));
    EXPECT_NEAR(row.xi_raw, wigner_ipr(g), 1e-9 * row.xi_raw);
    EXPECT_NEAR(row.xi_wavelet, wigner_wavelet_ipr(g), 1e-9 * row.xi_wavelet);
    EXPECT_NEAR(row.R, row.xi_raw / row.xi_wavelet, 1e-12 * row.R);
    // xi = 1/(N^2 sum W^4) is four times the Renyi-2 count of W^2 / sum W^2,
    // which never exceeds the Shannon count.
    EXPECT_LE(std::log2(row.xi_raw / 4.0), row.S + 1e-9);
    EXPECT_LE(std::log2(row.xi_wavelet / 4.0), row.S_wavelet + 1e-9);
}

TEST(scan, husimi_requires_even_qubits) {
    EXPECT_QPHASE_ERROR(husimi_cell(1.0, 5, 1), invalid_parameter);
    const auto row = husimi_cell(1.0, 6, 1);
    EXPECT_GE(row.xi_raw, 1.0);
    EXPECT_LE(row.xi_raw, 64.0 + 1e-9);
}

TEST(scan, default_tile_rule) {
    EXPECT_EQ(default_tile(2), 4u);
    EXPECT_EQ(default_tile(4), 4u);
    EXPECT_EQ(default_tile(5), 8u);
    EXPECT_EQ(default_tile(8), 16u);
    EXPECT_EQ(default_tile(9), 32u);
}

TEST(scan, image_range_is_checked) {
    EXPECT_QPHASE_ERROR(scan_image(SyntheticKind::spots, {1}, std::nullopt), invalid_parameter);
    EXPECT_QPHASE_ERROR(scan_image(SyntheticKind::spots, {15}, std::nullopt), invalid_parameter);
}

TEST(scan, tiled_and_full_image_scans_agree_when_tile_covers_image) {
    const auto full = scan_image(SyntheticKind::texture, {4}, 0);
    const auto tiled = scan_image(SyntheticKind::texture, {4}, 16);
    ASSERT_EQ(full.size(), 1u);
    EXPECT_NEAR(full[0].xi_wavelet, tiled[0].xi_wavelet, 1e-9 * full[0].xi_wavelet);
}

TEST(scan, fit_range_selects_rows) {
    std::vector<ScanRow> rows;
    for (int nq = 3; nq <= 8; ++nq) {
        const double slope = nq <= 5 ? 1.0 : 2.0;
        const double xi = std::exp2(slope * nq);
        rows.push_back({0.0, nq, xi, xi / 4, 4.0, std::log2(xi), std::log2(xi / 4)});
    }
    const auto late = fit_scan(rows, std::pair{6, 8});
    EXPECT_NEAR(late.raw.exponent, 2.0, 1e-12);
    EXPECT_NEAR(late.wavelet.exponent, 2.0, 1e-12);
    EXPECT_NEAR(late.ratio.exponent, 0.0, 1e-12);
    EXPECT_NEAR(late.entropy_raw.exponent, 2.0, 1e-12);
    EXPECT_NEAR(fit_scan(rows, std::pair{3, 5}).raw.exponent, 1.0, 1e-12);
    EXPECT_QPHASE_ERROR(fit_scan(rows, std::pair{7, 8}), insufficient_data);
}

TEST(scan, csv_layout) {
    const std::vector<ScanRow> rows{{2.0, 5, 10.0, 2.5, 4.0, 3.0, 1.5}};
    EXPECT_EQ(scan_csv(rows), "K,n_q,xi_raw,xi_wavelet,R,S,S_wavelet\n2,5,10,2.5,4,3,1.5\n");
}
