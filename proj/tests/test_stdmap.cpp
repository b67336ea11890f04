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

#include <numbers>

#include "qphase/stdmap.hpp"
#include "test_util.hpp"

using namespace qphase;
constexpr double kPi = std::numbers::pi;

TEST(stdmap, wrap_angle_range) {
    for (double th : {-7.0, -0.1, 0.0, 3.0, 2 * kPi, 13.0}) {
        const double w = wrap_angle(th);
        EXPECT_GE(w, 0.0);
        EXPECT_LT(w, 2 * kPi);
        EXPECT_NEAR(std::remainder(w - th, 2 * kPi), 0.0, 1e-12);
    }
}

TEST(stdmap, wrap_momentum_tracks_winding) {
    PhasePoint pt{0.0, 3 * kPi + 0.5, 0};
    const double unwrapped = pt.p;
    wrap_momentum(pt);
    EXPECT_GE(pt.p, -kPi);
    EXPECT_LT(pt.p, kPi);
    EXPECT_NEAR(pt.unwrapped_p(), unwrapped, 1e-12);
    EXPECT_EQ(pt.winding, 2);
}

TEST(stdmap, advance_then_retreat_is_identity) {
    PhasePoint pt{1.3, -2.2, 0};
    const PhasePoint start = pt;
    for (int i = 0; i < 50; ++i) advance(pt, 1.7);
    for (int i = 0; i < 50; ++i) retreat(pt, 1.7);
    EXPECT_NEAR(pt.theta, start.theta, 1e-9);
    EXPECT_NEAR(pt.unwrapped_p(), start.unwrapped_p(), 1e-9);
}

TEST(stdmap, zero_kick_is_free_rotation) {
    PhasePoint pt{0.5, 0.25, 0};
    for (int i = 0; i < 4; ++i) advance(pt, 0.0);
    EXPECT_DOUBLE_EQ(pt.p, 0.25);
    EXPECT_NEAR(pt.theta, 1.5, 1e-15);
}

TEST(stdmap, single_step_matches_map_equations) {
    PhasePoint pt{0.7, -1.1, 0};
    advance(pt, 0.9);
    const double p = -1.1 + 0.9 * std::sin(0.7);
    EXPECT_NEAR(pt.p, p, 1e-15);
    EXPECT_NEAR(pt.theta, wrap_angle(0.7 + p), 1e-15);
}

TEST(stdmap, band_ensemble_is_seeded_and_inside_band) {
    const auto a = band_ensemble(0.5, 1000, 3), b = band_ensemble(0.5, 1000, 3);
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        EXPECT_EQ(a.points[i].theta, b.points[i].theta);
        EXPECT_GE(a.points[i].p, -kPi);
        EXPECT_LE(a.points[i].p, -0.75 * kPi);
    }
    EXPECT_QPHASE_ERROR(band_ensemble(0.5, 0, 3), invalid_parameter);
}

TEST(stdmap, evolve_zero_steps_is_identity_and_negative_throws) {
    const auto e = band_ensemble(2.0, 100, 1);
    const auto same = evolve_ensemble(e, 0);
    EXPECT_EQ(same.points.front().theta, e.points.front().theta);
    EXPECT_QPHASE_ERROR(evolve_ensemble(e, -1), invalid_parameter);
}

TEST(stdmap, inverse_step_undoes_step) {
    const auto e = band_ensemble(1.5, 200, 2);
    const auto back = step_ensemble_inverse(step_ensemble(e));
    for (std::size_t i = 0; i < e.points.size(); ++i) {
        EXPECT_NEAR(back.points[i].theta, e.points[i].theta, 1e-12);
        EXPECT_NEAR(back.points[i].unwrapped_p(), e.points[i].unwrapped_p(), 1e-12);
    }
}

TEST(stdmap, histogram_is_normalized) {
    const auto e = evolve_ensemble(band_ensemble(0.9, 12345, 5), 100);
    const auto d = histogram_density(e, 64, 32);
    EXPECT_EQ(d.n_theta(), 64u);
    EXPECT_EQ(d.n_p(), 32u);
    double s = 0.0;
    for (double v : d.mass.data()) {
        EXPECT_GE(v, 0.0);
        s += v;
    }
    EXPECT_NEAR(s, 1.0, 1e-12);
}

TEST(stdmap, chaos_spreads_momentum_more_than_regular_motion) {
    const auto regular = evolve_ensemble(band_ensemble(0.5, 2000, 8), 300);
    const auto chaotic = evolve_ensemble(band_ensemble(2.0, 2000, 8), 300);
    EXPECT_GT(momentum_spread(chaotic), 3.0 * momentum_spread(regular));
}
