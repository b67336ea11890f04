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

#include "oracles.hpp"
#include "qphase/husimi.hpp"
#include "qphase/rotator.hpp"
#include "qphase/wigner.hpp"
#include "test_util.hpp"

using namespace qphase;

TEST(husimi, matches_box_window_overlaps) {
    for (int nq : {4, 6, 8}) {
        const auto x = oracle::random_state(std::size_t{1} << nq, static_cast<unsigned>(nq));
        const auto h = modified_husimi(StateVector::from_amplitudes(x));
        for (std::size_t j = 0; j < h.side(); ++j) {
            for (std::size_t l = 0; l < h.side(); ++l) {
                EXPECT_LT(std::abs(h.at(l, j) - oracle::husimi_amplitude(x, l, j)), 1e-13) << nq << " " << l << " " << j;
            }
        }
    }
}

TEST(husimi, equals_partial_transform_exactly) {
    const auto s = StateVector::random(8, 3);
    const auto h = modified_husimi(s);
    const auto p = partial_qft_blocks(s, 16, Direction::inverse);
    EXPECT_EQ(h.values().storage(), p.vector());
}

TEST(husimi, preserves_probability) {
    const auto h = modified_husimi(StateVector::random(12, 4));
    EXPECT_NEAR(h.total_probability(), 1.0, 1e-12);
}

TEST(husimi, momentum_delta_spreads_over_one_block_row) {
    const std::size_t n0 = 2 * 8 + 5;  // j0 = 2, r0 = 5 at N = 64
    const auto h = modified_husimi(StateVector::basis(6, n0));
    const auto p = h.probabilities();
    for (std::size_t j = 0; j < 8; ++j) {
        for (std::size_t l = 0; l < 8; ++l) EXPECT_NEAR(p(j, l), j == 2 ? 1.0 / 8.0 : 0.0, 1e-15);
    }
}

TEST(husimi, uniform_block_is_a_point_mass) {
    std::vector<cplx> v(64, 0.0);
    for (std::size_t r = 0; r < 8; ++r) v[3 * 8 + r] = 1.0 / std::sqrt(8.0);
    const auto h = modified_husimi(StateVector::from_amplitudes(v));
    const auto p = h.probabilities();
    for (std::size_t j = 0; j < 8; ++j) {
        for (std::size_t l = 0; l < 8; ++l) EXPECT_NEAR(p(j, l), (j == 3 && l == 0) ? 1.0 : 0.0, 1e-15);
    }
}

TEST(husimi, odd_qubit_count_is_rejected) {
    EXPECT_QPHASE_ERROR(modified_husimi(StateVector::uniform(5)), invalid_parameter);
}

TEST(husimi, coherent_state_self_overlap_is_one) {
    const std::size_t N = 64;
    const double a = CoherentStateParams::default_width(N);
    EXPECT_NEAR(a, std::sqrt(64.0 / (4.0 * std::numbers::pi)), 1e-15);
    const auto phi = coherent_state(N, 1.1, 20.0, a);
    EXPECT_NEAR(phi.norm_squared(), 1.0, 1e-12);
    CoherentStateParams params{a, {{1.1, 20.0}}};
    EXPECT_NEAR(gaussian_husimi(phi, params)[0], 1.0, 1e-12);
}

TEST(husimi, distant_coherent_states_do_not_overlap) {
    const std::size_t N = 1024;
    const double a = 3.0;
    const auto phi = coherent_state(N, 0.0, 100.0, a);
    CoherentStateParams params{a, {{0.0, 100.0 + 12.0 * a}, {2.0, 600.0}}};
    for (double v : gaussian_husimi(phi, params)) EXPECT_LT(v, 1e-10);
}

TEST(husimi, gaussian_husimi_is_wigner_smoothed_by_coherent_kernel) {
    // |<phi|psi>|^2 = 2N sum W_psi W_phi: the Husimi value is the phase-space
    // overlap of W_psi with the coherent-state Wigner function.
    const std::size_t N = 64;
    const auto psi = StateVector::random(6, 21);
    const auto w_psi = wigner_direct(qft(psi, Direction::forward));
    const double a = CoherentStateParams::default_width(N);
    const auto params = CoherentStateParams::lattice(N, 8, 8, a);
    const auto values = gaussian_husimi(psi, params);
    std::vector<double> smoothed;
    for (const auto &[theta0, n0] : params.centers) {
        const auto w_phi = wigner_direct(qft(coherent_state(N, theta0, n0, a), Direction::forward));
        double s = 0.0;
        for (std::size_t T = 0; T < 2 * N; ++T) {
            for (std::size_t n = 0; n < 2 * N; ++n) s += w_psi(T, n) * w_phi(T, n);
        }
        smoothed.push_back(2.0 * N * s);
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        EXPECT_NEAR(values[i], smoothed[i], 1e-12);
        mx += values[i];
        my += smoothed[i];
    }
    mx /= values.size();
    my /= values.size();
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        sxy += (values[i] - mx) * (smoothed[i] - my);
        sxx += (values[i] - mx) * (values[i] - mx);
        syy += (smoothed[i] - my) * (smoothed[i] - my);
    }
    EXPECT_GT(sxy / std::sqrt(sxx * syy), 0.99);
}

TEST(husimi, gaussian_husimi_validates_parameters) {
    const auto psi = StateVector::uniform(4);
    EXPECT_QPHASE_ERROR(gaussian_husimi(psi, CoherentStateParams{0.0, {{0.0, 0.0}}}), invalid_parameter);
    EXPECT_QPHASE_ERROR(gaussian_husimi(psi, CoherentStateParams{1.0, {{0.0, 16.0}}}), invalid_parameter);
}

TEST(husimi, modulus_state_components_are_normalized_squares) {
    const auto s = StateVector::random(8, 5);
    const auto h = modified_husimi(s);
    const auto m = husimi_modulus_state(s);
    double s4 = 0.0;
    for (const auto &v : h.values().data()) s4 += std::norm(v) * std::norm(v);
    EXPECT_NEAR(m.diagonal_weight, s4, 1e-14);
    EXPECT_NEAR(m.state.norm_squared(), 1.0, 1e-10);
    for (std::size_t i = 0; i < m.state.size(); ++i) {
        EXPECT_NEAR(m.state[i].real(), std::norm(h.values().data()[i]) / std::sqrt(s4), 1e-10);
        EXPECT_EQ(m.state[i].imag(), 0.0);
    }
}

TEST(husimi, modulus_state_of_point_mass_needs_no_amplification) {
    std::vector<cplx> v(16, 0.0);
    for (std::size_t r = 0; r < 4; ++r) v[4 + r] = 0.5;
    const auto m = husimi_modulus_state(StateVector::from_amplitudes(v), 7);
    EXPECT_NEAR(m.diagonal_weight, 1.0, 1e-15);
    EXPECT_EQ(m.amplification_iterations, 0);
    EXPECT_NEAR(std::abs(m.state[4]), 1.0, 1e-15);
    EXPECT_DOUBLE_EQ(m.nominal_cost, 7.0);
}

TEST(husimi, modulus_state_uniform_weight_is_one_over_n) {
    // A momentum delta in every block with a random phase per block gives
    // |H|^2 = 1/N everywhere.
    std::vector<cplx> v(64, 0.0);
    for (std::size_t j = 0; j < 8; ++j) v[8 * j + j % 3] = std::polar(1.0 / std::sqrt(8.0), 0.3 * j);
    const auto m = husimi_modulus_state(StateVector::from_amplitudes(v));
    EXPECT_NEAR(m.diagonal_weight, 1.0 / 64.0, 1e-15);
    EXPECT_EQ(m.amplification_iterations, 5);  // floor(pi / (4 asin(1/8)) - 1/2)
}

TEST(husimi, modulus_state_respects_cap) {
    EXPECT_QPHASE_ERROR(husimi_modulus_state(StateVector::uniform(12), 1, 10), resource);
}
