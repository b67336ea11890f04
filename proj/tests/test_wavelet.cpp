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

#include "oracles.hpp"
#include "qphase/rng.hpp"
#include "qphase/wavelet.hpp"
#include "test_util.hpp"

using namespace qphase;
using qphase::testing::max_diff;

namespace {

std::vector<double> noise(std::size_t n, std::uint64_t seed) {
    Rng r(seed);
    std::vector<double> v(n);
    for (auto &x : v) x = r.uniform(-1.0, 1.0);
    return v;
}

}  // namespace

TEST(wavelet, full_depth_leaves_four_samples) {
    EXPECT_EQ(full_depth(4), 1);
    EXPECT_EQ(full_depth(8), 1);
    EXPECT_EQ(full_depth(16), 2);
    EXPECT_EQ(full_depth(1024), 8);
}

TEST(wavelet, forward_1d_matches_dense_matrix) {
    for (std::size_t L : {8u, 16u, 64u}) {
        const auto x = noise(L, L);
        for (int lev = 1; lev <= full_depth(L); ++lev) {
            const auto c = d4_forward_1d(x, lev);
            EXPECT_LT(max_diff(c.values.data(), oracle::apply(oracle::d4_matrix(L, lev), x)), 1e-14) << L << " " << lev;
        }
    }
}

TEST(wavelet, dense_matrix_is_orthogonal) {
    const auto M = oracle::d4_matrix(32, 3);
    for (std::size_t i = 0; i < 32; ++i) {
        for (std::size_t j = 0; j < 32; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < 32; ++k) dot += M[i][k] * M[j][k];
            EXPECT_NEAR(dot, i == j ? 1.0 : 0.0, 1e-14);
        }
    }
}

TEST(wavelet, round_trip_1d_and_2d) {
    const auto x = noise(512, 1);
    EXPECT_LT(max_diff(d4_inverse_1d(d4_forward_1d(x)), x), 1e-13);
    Grid2D<double> g(64, 64, noise(64 * 64, 2));
    for (int lev = 1; lev <= full_depth(64); ++lev) {
        EXPECT_LT(max_diff(d4_inverse_2d(d4_forward_2d(g, lev)).data(), g.data()), 1e-13);
    }
}

TEST(wavelet, two_dimensional_is_rows_then_columns_per_level) {
    const std::size_t L = 16;
    Grid2D<double> g(L, L, noise(L * L, 3));
    const auto c = d4_forward_2d(g, 1);
    const auto M = oracle::d4_matrix(L, 1);
    Grid2D<double> rows(L, L);
    for (std::size_t r = 0; r < L; ++r) {
        const auto y = oracle::apply(M, std::vector<double>(g.row(r).begin(), g.row(r).end()));
        for (std::size_t k = 0; k < L; ++k) rows(r, k) = y[k];
    }
    for (std::size_t col = 0; col < L; ++col) {
        std::vector<double> v(L);
        for (std::size_t r = 0; r < L; ++r) v[r] = rows(r, col);
        const auto y = oracle::apply(M, v);
        for (std::size_t r = 0; r < L; ++r) EXPECT_NEAR(c.values(r, col), y[r], 1e-14);
    }
}

TEST(wavelet, parseval) {
    Grid2D<double> g(128, 128, noise(128 * 128, 4));
    const auto c = d4_forward_2d(g);
    double e0 = 0.0, e1 = 0.0;
    for (double v : g.data()) e0 += v * v;
    for (double v : c.values.data()) e1 += v * v;
    EXPECT_NEAR(e1 / e0, 1.0, 1e-12);
}

TEST(wavelet, linear_signal_details_vanish_at_first_level) {
    // Two vanishing moments: interior details of a linear ramp are zero.
    std::vector<double> ramp(64);
    for (std::size_t i = 0; i < 64; ++i) ramp[i] = 0.5 + 0.01 * static_cast<double>(i);
    const auto c = d4_forward_1d(ramp, 1);
    for (std::size_t k = 32; k < 63; ++k) EXPECT_NEAR(c.values.data()[k], 0.0, 1e-14) << k;
}

TEST(wavelet, tiled_transform_is_independent_per_tile) {
    Grid2D<double> g(32, 32, noise(32 * 32, 5));
    const auto t = tiled_forward_2d(g, 8);
    EXPECT_EQ(t.tile_size, 8u);
    for (std::size_t tr = 0; tr < 4; ++tr) {
        for (std::size_t tc = 0; tc < 4; ++tc) {
            Grid2D<double> tile(8, 8);
            for (std::size_t r = 0; r < 8; ++r) {
                for (std::size_t c = 0; c < 8; ++c) tile(r, c) = g(8 * tr + r, 8 * tc + c);
            }
            const auto ref = d4_forward_2d(tile);
            for (std::size_t r = 0; r < 8; ++r) {
                for (std::size_t c = 0; c < 8; ++c) EXPECT_NEAR(t.values(8 * tr + r, 8 * tc + c), ref.values(r, c), 1e-15);
            }
        }
    }
    EXPECT_LT(max_diff(tiled_inverse_2d(t).data(), g.data()), 1e-13);
    EXPECT_LT(max_diff(inverse_transform(t).data(), g.data()), 1e-13);
}

TEST(wavelet, single_tile_equals_full_transform) {
    Grid2D<double> g(32, 32, noise(32 * 32, 6));
    EXPECT_EQ(tiled_forward_2d(g, 32).values, d4_forward_2d(g).values);
}

TEST(wavelet, invalid_shapes_are_rejected) {
    EXPECT_QPHASE_ERROR(d4_forward_1d(std::vector<double>(12, 1.0)), invalid_dimension);
    EXPECT_QPHASE_ERROR(d4_forward_1d(std::vector<double>(2, 1.0)), invalid_dimension);
    EXPECT_QPHASE_ERROR(d4_forward_1d(std::vector<double>(16, 1.0), 4), invalid_dimension);
    EXPECT_QPHASE_ERROR(d4_forward_1d(std::vector<double>(16, 1.0), 0), invalid_dimension);
    EXPECT_QPHASE_ERROR(d4_forward_2d(Grid2D<double>(16, 32, 1.0)), invalid_dimension);
    EXPECT_QPHASE_ERROR(tiled_forward_2d(Grid2D<double>(32, 32, 1.0), 6), invalid_dimension);
    EXPECT_QPHASE_ERROR(tiled_forward_2d(Grid2D<double>(32, 32, 1.0), 2), invalid_dimension);
    EXPECT_QPHASE_ERROR(tiled_forward_2d(Grid2D<double>(32, 32, 1.0), 64), invalid_dimension);
}
