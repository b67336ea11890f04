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

#include "qphase/scan.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "qphase/error.hpp"
#include "qphase/imageio.hpp"
#include "qphase/rotator.hpp"
#include "qphase/wavelet.hpp"

namespace qphase {
namespace {

double entropy_of_squares(std::span<const double> values) {
    auto w = squared(values);
    double total = 0.0;
    for (double x : w) total += x;
    for (double &x : w) x /= total;
    return entropy(w);
}

template <typename Cell>
std::vector<ScanRow> run_cells(const std::vector<int> &nq_values, Cell &&cell) {
    if (nq_values.empty()) fail(ErrorCategory::invalid_parameter, "scan needs at least one n_q value");
    std::vector<int> nqs = nq_values;
    std::sort(nqs.begin(), nqs.end());
    nqs.erase(std::unique(nqs.begin(), nqs.end()), nqs.end());
    std::vector<ScanRow> rows(nqs.size());
    std::vector<std::exception_ptr> errors(nqs.size());
    // Largest cells first so the tail of the schedule is short.
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t ii = static_cast<std::ptrdiff_t>(nqs.size()) - 1; ii >= 0; --ii) {
        const auto i = static_cast<std::size_t>(ii);
        try {
            rows[i] = cell(nqs[i]);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto &e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return rows;
}

}  // namespace

ScanRow wigner_cell(double K, int n_q, int t) {
    const auto params = RotatorParams::standard(n_q, K);
    const auto psi = evolve(initial_band_state(params), params, t);
    const auto grid = wigner_direct(to_angle_representation(psi));
    const auto full = grid.materialize();
    const auto coeffs = d4_forward_2d(full);
    ScanRow row{K, n_q, wigner_ipr(grid), wigner_ipr(coeffs.values.data(), grid.dimension()), 0.0,
                entropy_of_squares(full.data()), entropy_of_squares(coeffs.values.data())};
    row.R = ipr_ratio(row.xi_raw, row.xi_wavelet);
    return row;
}

ScanRow husimi_cell(double K, int n_q, int t) {
    const auto params = RotatorParams::standard(n_q, K);
    const auto psi = evolve(initial_band_state(params), params, t);
    const auto h = modified_husimi(psi);
    const auto moduli = h.moduli();
    const auto coeffs = d4_forward_2d(moduli);
    ScanRow row{K, n_q, husimi_ipr(h), ipr(squared(coeffs.values.data())), 0.0,
                entropy_of_squares(moduli.data()), entropy_of_squares(coeffs.values.data())};
    row.R = ipr_ratio(row.xi_raw, row.xi_wavelet);
    return row;
}

ScanRow image_cell(const GrayImage &image, int n_q, std::size_t tile) {
    const auto amps = encode_wavefunction(image);
    const auto coeffs = tile == 0 ? d4_forward_2d(amps.a) : tiled_forward_2d(amps.a, tile);
    const auto w_raw = squared(amps.a.data());
    const auto w_wav = squared(coeffs.values.data());
    ScanRow row{0.0, n_q, ipr(w_raw), ipr(w_wav), 0.0, entropy(w_raw), entropy(w_wav)};
    row.R = ipr_ratio(row.xi_raw, row.xi_wavelet);
    return row;
}

std::vector<ScanRow> scan_wigner(double K, const std::vector<int> &nq_values, int t) {
    return run_cells(nq_values, [&](int nq) { return wigner_cell(K, nq, t); });
}

std::vector<ScanRow> scan_husimi(double K, const std::vector<int> &nq_values, int t) {
    return run_cells(nq_values, [&](int nq) { return husimi_cell(K, nq, t); });
}

std::size_t default_tile(int n_q) { return std::size_t{1} << std::max(2, (n_q + 1) / 2); }

std::vector<ScanRow> scan_image(SyntheticKind kind, const std::vector<int> &nq_values,
                                std::optional<std::size_t> tile, std::uint64_t seed) {
    return run_cells(nq_values, [&](int nq) {
        if (nq < 2 || nq > 14) fail(ErrorCategory::invalid_parameter, "image n_q must lie in [2, 14]");
        const auto img = synthetic_image(kind, std::size_t{1} << nq, seed);
        return image_cell(img, nq, tile.value_or(default_tile(nq)));
    });
}

ScanFits fit_scan(const std::vector<ScanRow> &rows, std::optional<std::pair<int, int>> range) {
    std::vector<std::pair<int, double>> raw, wav, ratio, s_raw, s_wav;
    for (const auto &r : rows) {
        if (range && (r.n_q < range->first || r.n_q > range->second)) continue;
        raw.emplace_back(r.n_q, r.xi_raw);
        wav.emplace_back(r.n_q, r.xi_wavelet);
        ratio.emplace_back(r.n_q, r.R);
        s_raw.emplace_back(r.n_q, std::exp2(r.S));
        s_wav.emplace_back(r.n_q, std::exp2(r.S_wavelet));
    }
    return {fit_scaling(raw), fit_scaling(wav), fit_scaling(ratio), fit_scaling(s_raw), fit_scaling(s_wav)};
}

std::string scan_csv(const std::vector<ScanRow> &rows) {
    std::string out = "K,n_q,xi_raw,xi_wavelet,R,S,S_wavelet\n";
    for (const auto &r : rows) {
        out += format_double(r.K) + "," + std::to_string(r.n_q) + "," + format_double(r.xi_raw) + "," +
               format_double(r.xi_wavelet) + "," + format_double(r.R) + "," + format_double(r.S) + "," +
               format_double(r.S_wavelet) + "\n";
    }
    return out;
}

}  // namespace qphase
