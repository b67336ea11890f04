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

#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qphase/analysis.hpp"
#include "qphase/error.hpp"
#include "qphase/husimi.hpp"
#include "qphase/imageio.hpp"
#include "qphase/log.hpp"
#include "qphase/measurement.hpp"
#include "qphase/rotator.hpp"
#include "qphase/scan.hpp"
#include "qphase/stdmap.hpp"
#include "qphase/synthetic.hpp"
#include "qphase/wavelet.hpp"
#include "qphase/wigner.hpp"

namespace qphase::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        fail(ErrorCategory::io, "SHA-256 computation failed");
    }
    std::string hex;
    char buf[3];
    for (unsigned i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

/// Collects output files and writes manifest.json beside them.
class OutputSet {
  public:
    OutputSet(std::string command, fs::path dir) : command_(std::move(command)), dir_(std::move(dir)) {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec) fail(ErrorCategory::io, "cannot create output directory " + dir_.string() + ": " + ec.message());
    }

    void write(const std::string &name, std::string_view contents) {
        write_text_file(dir_ / name, contents);
        files_.push_back({{"file", name}, {"bytes", contents.size()}, {"sha256", sha256_hex(contents)}});
    }

    void finish(const json &parameters, const json &summary) {
        json manifest = {{"tool", "qphase"},
                         {"version", QPHASE_VERSION},
                         {"command", command_},
                         {"parameters", parameters},
                         {"summary", summary},
                         {"outputs", files_}};
        write_text_file(dir_ / "manifest.json", manifest.dump(2) + "\n");
    }

  private:
    std::string command_;
    fs::path dir_;
    json files_ = json::array();
};

std::pair<int, int> parse_range(const std::string &text, const char *flag) {
    const auto colon = text.find(':');
    try {
        std::size_t used = 0;
        if (colon == std::string::npos) {
            const int v = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {v, v};
        }
        const int a = std::stoi(text.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument(text);
        const std::string rest = text.substr(colon + 1);
        const int b = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(text);
        return {a, b};
    } catch (const std::logic_error &) {
        throw CLI::ValidationError(flag, "expected a:b, got '" + text + "'");
    }
}

void require_invariant(bool ok, const std::string &what) {
    if (!ok) fail(ErrorCategory::invariant_violation, what);
}

/// Grid with x = first index, y = second index increasing upward.
Grid2D<double> upright(const Grid2D<double> &g) {
    Grid2D<double> out(g.cols(), g.rows());
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t c = 0; c < g.cols(); ++c) out(g.cols() - 1 - c, r) = g(r, c);
    }
    return out;
}

std::string fixed_label(double v) {
    std::ostringstream s;
    s << v;
    return s.str();
}

struct Common {
    std::string out;
    std::uint64_t seed = 0;
};

// ---- classical ----

struct ClassicalArgs {
    std::vector<double> K;
    int t = 0;
    std::size_t ensemble = 100000;
    std::size_t bins = 256;
};

json cmd_classical(const ClassicalArgs &a, const Common &c) {
    if (a.t < 0) fail(ErrorCategory::invalid_parameter, "--t must be >= 0");
    OutputSet out("classical", c.out);
    json summary = json::array();
    for (double K : a.K) {
        const auto e = evolve_ensemble(band_ensemble(K, a.ensemble, c.seed), a.t);
        const auto d = histogram_density(e, a.bins, a.bins);
        double total = 0.0;
        for (double v : d.mass.data()) total += v;
        require_invariant(std::abs(total - 1.0) <= 1e-12, "classical density does not sum to 1");
        const std::string stem = "classical_K" + fixed_label(K);
        out.write(stem + ".csv", grid_csv(d.mass, {"theta_bin", "p_bin", "mass"}));
        out.write(stem + ".pgm", encode_pgm(heatmap(upright(d.mass), false)));
        summary.push_back({{"K", K}, {"momentum_spread", momentum_spread(e)}});
    }
    json params = {{"K", a.K}, {"t", a.t}, {"ensemble", a.ensemble}, {"bins", a.bins}, {"seed", c.seed}};
    out.finish(params, summary);
    return summary;
}

// ---- wigner ----

struct StateArgs {
    double K = 0.0;
    int nq = 0;
    int t = 0;
};

StateVector evolved_band(const StateArgs &a) {
    if (a.t < 0) fail(ErrorCategory::invalid_parameter, "--t must be >= 0");
    const auto p = RotatorParams::standard(a.nq, a.K);
    return evolve(initial_band_state(p), p, a.t);
}

json cmd_wigner(const StateArgs &a, bool pipeline, const Common &c) {
    WignerGrid grid;
    if (pipeline) {
        const auto p = RotatorParams::standard(a.nq, a.K);
        grid = wigner_register_pipeline(initial_band_state(p), p, a.t).grid;
    } else {
        grid = wigner_direct(to_angle_representation(evolved_band(a)));
    }
    const auto rules = check_sum_rules(grid);
    const double xi = wigner_ipr(grid);
    const double xi_w = wigner_wavelet_ipr(grid);
    json summary = {{"xi", xi},
                    {"xi_wavelet", xi_w},
                    {"R", ipr_ratio(xi, xi_w)},
                    {"sum", rules.sum},
                    {"sum_squares", rules.sum_squares},
                    {"expected_sum_squares", rules.expected_sum_squares},
                    {"max_abs", rules.max_abs},
                    {"bound", rules.bound},
                    {"imag_residue", rules.imag_residue}};
    require_invariant(rules.ok, "Wigner sum rules failed: " + summary.dump());
    OutputSet out("wigner", c.out);
    const auto full = grid.materialize();
    out.write("wigner.csv", grid_csv(full, {"theta", "n", "W"}));
    out.write("wigner.pgm", encode_pgm(heatmap(upright(full), true)));
    out.finish({{"K", a.K}, {"nq", a.nq}, {"t", a.t}, {"pipeline", pipeline}}, summary);
    return summary;
}

// ---- husimi ----

json cmd_husimi(const StateArgs &a, const Common &c) {
    const auto h = modified_husimi(evolved_band(a));
    const double total = h.total_probability();
    require_invariant(std::abs(total - 1.0) <= 1e-10, "Husimi probabilities do not sum to 1");
    const auto probs = h.probabilities();
    json summary = {{"total_probability", total},
                    {"xi", husimi_ipr(h)},
                    {"xi_wavelet", husimi_wavelet_ipr(h)},
                    {"side", h.side()}};
    OutputSet out("husimi", c.out);
    out.write("husimi.csv", grid_csv(probs, {"j", "l", "probability"}));
    // x = l (angle), y = j (momentum block) upward.
    Grid2D<double> img(h.side(), h.side());
    for (std::size_t j = 0; j < h.side(); ++j) {
        for (std::size_t l = 0; l < h.side(); ++l) img(h.side() - 1 - j, l) = probs(j, l);
    }
    out.write("husimi.pgm", encode_pgm(heatmap(img, false)));
    out.finish({{"K", a.K}, {"nq", a.nq}, {"t", a.t}}, summary);
    return summary;
}

// ---- scan ----

struct ScanArgs {
    std::string dist;
    std::optional<double> K;
    std::string nq_range;
    int t = 0;
    std::optional<std::size_t> tile;
    std::string image = "portrait";
    std::string fit_range;
};

json fit_json(const ScalingFit &f) {
    return {{"exponent", f.exponent},
            {"intercept", f.intercept},
            {"stderr", f.standard_error},
            {"nq_min", f.nq_min},
            {"nq_max", f.nq_max}};
}

json cmd_scan(const ScanArgs &a, const Common &c) {
    const auto [lo, hi] = parse_range(a.nq_range, "--nq");
    if (lo > hi) throw CLI::ValidationError("--nq", "empty n_q range " + a.nq_range);
    std::vector<int> nqs;
    for (int n = lo; n <= hi; ++n) {
        if (a.dist != "husimi" || n % 2 == 0) nqs.push_back(n);
    }
    if (nqs.empty()) throw CLI::ValidationError("--nq", "no usable n_q in range " + a.nq_range);
    std::optional<std::pair<int, int>> fit_range;
    if (!a.fit_range.empty()) fit_range = parse_range(a.fit_range, "--fit-range");

    std::vector<ScanRow> rows;
    if (a.dist == "image") {
        rows = scan_image(parse_kind(a.image), nqs, a.tile, c.seed);
    } else {
        if (!a.K) throw CLI::RequiredError("--K");
        if (a.t < 0) fail(ErrorCategory::invalid_parameter, "--t must be >= 0");
        rows = a.dist == "wigner" ? scan_wigner(*a.K, nqs, a.t) : scan_husimi(*a.K, nqs, a.t);
    }
    const auto fits = fit_scan(rows, fit_range);
    json summary = {{"raw", fit_json(fits.raw)},
                    {"wavelet", fit_json(fits.wavelet)},
                    {"ratio", fit_json(fits.ratio)},
                    {"entropy_raw", fit_json(fits.entropy_raw)},
                    {"entropy_wavelet", fit_json(fits.entropy_wavelet)}};
    OutputSet out("scan", c.out);
    out.write("scan.csv", scan_csv(rows));
    json params = {{"dist", a.dist}, {"nq", a.nq_range}, {"t", a.t}, {"seed", c.seed}};
    if (a.K) params["K"] = *a.K;
    if (a.tile) params["tile"] = *a.tile;
    if (a.dist == "image") params["image"] = a.image;
    if (!a.fit_range.empty()) params["fit_range"] = a.fit_range;
    out.finish(params, summary);
    return summary;
}

// ---- reconstruct ----

struct ReconstructArgs {
    std::string image_path;
    std::string synthetic;
    std::size_t side = 128;
    std::string method;
    std::size_t k = 0;
    std::size_t tile = 0;
};

GrayImage decode_image(const Grid2D<double> &field, double pixel_norm) {
    GrayImage img{field.cols(), field.rows(), 255, std::vector<std::uint8_t>(field.size())};
    for (std::size_t i = 0; i < field.size(); ++i) {
        img.pixels[i] = static_cast<std::uint8_t>(std::clamp(std::lround(field.data()[i] * pixel_norm), 0L, 255L));
    }
    return img;
}

json cmd_reconstruct(const ReconstructArgs &a, const Common &c) {
    if (a.image_path.empty() == a.synthetic.empty()) {
        throw CLI::ValidationError("--image/--synthetic", "give exactly one image source");
    }
    const GrayImage img = a.image_path.empty() ? synthetic_image(parse_kind(a.synthetic), a.side, c.seed)
                                               : load_pgm(a.image_path);
    const auto amps = encode_wavefunction(img);
    double energy = 0.0;
    for (double v : amps.a.data()) energy += v * v;
    require_invariant(std::abs(energy - 1.0) <= 1e-10, "image encoding is not normalized");

    Reconstruction rec;
    if (a.method == "topk") {
        const auto coeffs = a.tile == 0 ? d4_forward_2d(amps.a) : tiled_forward_2d(amps.a, a.tile);
        rec = topk_reconstruct(coeffs, a.k, amps.a, amps.pixel_norm);
    } else if (a.method == "montecarlo") {
        rec = monte_carlo_reconstruct(amps.a, a.k, c.seed, amps.pixel_norm);
    } else {
        throw CLI::ValidationError("--method", "expected topk or montecarlo");
    }
    json summary = {{"psnr", std::isfinite(rec.psnr) ? json(rec.psnr) : json("inf")},
                    {"l2_error", rec.l2_error},
                    {"width", img.width},
                    {"height", img.height}};
    OutputSet out("reconstruct", c.out);
    out.write("original.pgm", encode_pgm(img));
    out.write("reconstruction.pgm", encode_pgm(decode_image(rec.field, amps.pixel_norm)));
    json params = {{"method", a.method}, {"k", a.k}, {"tile", a.tile}, {"seed", c.seed}};
    if (a.image_path.empty()) {
        params["synthetic"] = a.synthetic;
        params["side"] = a.side;
    } else {
        params["image"] = a.image_path;
    }
    out.finish(params, summary);
    return summary;
}

// ---- amplify ----

struct AmplifyArgs {
    StateArgs state;
    std::string region;
    std::optional<int> iterations;
};

json cmd_amplify(const AmplifyArgs &a, const Common &c) {
    const auto h = modified_husimi(evolved_band(a.state));
    const std::size_t side = h.side();
    const auto comma = a.region.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--region", "expected j0:j1,l0:l1");
    const auto [j0, j1] = parse_range(a.region.substr(0, comma), "--region");
    const auto [l0, l1] = parse_range(a.region.substr(comma + 1), "--region");
    if (j0 < 0 || l0 < 0 || j1 > static_cast<int>(side) || l1 > static_cast<int>(side) || j0 >= j1 || l0 >= l1) {
        fail(ErrorCategory::invalid_parameter,
             "region must be half-open ranges inside [0, " + std::to_string(side) + ")");
    }
    const auto region = [&](std::size_t idx) {
        const auto j = static_cast<int>(idx / side), l = static_cast<int>(idx % side);
        return j >= j0 && j < j1 && l >= l0 && l < l1;
    };
    const auto input = StateVector::unchecked(h.values().storage());
    const auto rep = amplitude_amplify(input, region, a.iterations);

    double drift = 0.0;
    std::size_t anchor = input.size();
    for (std::size_t i = 0; i < input.size(); ++i) {
        if (region(i) && (anchor == input.size() || std::abs(input[i]) > std::abs(input[anchor]))) anchor = i;
    }
    for (std::size_t i = 0; i < input.size(); ++i) {
        if (!region(i)) continue;
        const cplx expect = input[i] / input[anchor];
        drift = std::max(drift, std::abs(rep.state[i] / rep.state[anchor] - expect) / std::max(1.0, std::abs(expect)));
    }
    const double closed = amplified_weight(rep.initial_weight, rep.iterations);
    json summary = {{"initial_weight", rep.initial_weight},
                    {"iterations", rep.iterations},
                    {"auto_iterations", optimal_iterations(rep.initial_weight)},
                    {"final_weight", rep.final_weight},
                    {"closed_form_weight", closed},
                    {"ratio_drift", drift}};
    require_invariant(std::abs(rep.final_weight - closed) <= 1e-9, "amplified weight disagrees with closed form");
    require_invariant(drift <= 1e-10, "relative amplitudes inside the region changed");

    Grid2D<double> img(side, side);
    for (std::size_t j = 0; j < side; ++j) {
        for (std::size_t l = 0; l < side; ++l) img(side - 1 - j, l) = std::norm(rep.state[j * side + l]);
    }
    OutputSet out("amplify", c.out);
    out.write("amplified.pgm", encode_pgm(heatmap(img, false)));
    json params = {{"K", a.state.K}, {"nq", a.state.nq}, {"t", a.state.t}, {"region", a.region}};
    if (a.iterations) params["iterations"] = *a.iterations;
    out.finish(params, summary);
    return summary;
}

int category_exit_code(ErrorCategory c) { return kExitCategoryBase + static_cast<int>(c); }

void report_error(std::string_view category, int code, std::string_view message) {
    json line = {{"error", {{"category", category}, {"exit_code", code}, {"message", message}}}};
    std::cerr << line.dump() << std::endl;
}

}  // namespace

int run(const std::vector<std::string> &args) {
    CLI::App app{"Phase-space distributions of the quantum kicked rotator"};
    app.require_subcommand(1);
    Common common;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--out", common.out, "Output directory")->required();
        sub->add_option("--seed", common.seed, "64-bit RNG seed");
    };
    auto add_state = [](CLI::App *sub, StateArgs &s) {
        sub->add_option("--K", s.K, "Chaos parameter K = kT")->required();
        sub->add_option("--nq", s.nq, "Qubits, N = 2^nq")->required();
        sub->add_option("--t", s.t, "Number of kicks")->required();
    };

    ClassicalArgs classical;
    auto *c_sub = app.add_subcommand("classical", "Standard-map ensemble densities");
    c_sub->add_option("--K", classical.K, "Chaos parameter(s)")->required()->expected(1, -1);
    c_sub->add_option("--t", classical.t, "Iterations")->required();
    c_sub->add_option("--ensemble", classical.ensemble, "Ensemble size");
    c_sub->add_option("--bins", classical.bins, "Bins per axis");
    add_common(c_sub);

    StateArgs wig;
    bool pipeline = false;
    auto *w_sub = app.add_subcommand("wigner", "Wigner function of the evolved band state");
    add_state(w_sub, wig);
    w_sub->add_flag("--pipeline", pipeline, "Use the register-level construction");
    add_common(w_sub);

    StateArgs hus;
    auto *h_sub = app.add_subcommand("husimi", "Modified Husimi function of the evolved band state");
    add_state(h_sub, hus);
    add_common(h_sub);

    ScanArgs scan;
    std::size_t scan_tile = 0;
    auto *s_sub = app.add_subcommand("scan", "IPR scaling scan over n_q");
    s_sub->add_option("--dist", scan.dist, "wigner, husimi or image")
        ->required()
        ->check(CLI::IsMember({"wigner", "husimi", "image"}));
    s_sub->add_option("--K", scan.K, "Chaos parameter (wigner, husimi)");
    s_sub->add_option("--nq", scan.nq_range, "n_q range a:b")->required();
    s_sub->add_option("--t", scan.t, "Number of kicks");
    auto *tile_opt = s_sub->add_option("--tile", scan_tile, "Image tile side; 0 = whole image");
    s_sub->add_option("--image", scan.image, "Synthetic image kind");
    s_sub->add_option("--fit-range", scan.fit_range, "Fit range a:b");
    add_common(s_sub);

    ReconstructArgs recon;
    auto *r_sub = app.add_subcommand("reconstruct", "Top-k wavelet vs Monte-Carlo image reconstruction");
    r_sub->add_option("--image", recon.image_path, "PGM input");
    r_sub->add_option("--synthetic", recon.synthetic, "Synthetic image kind");
    r_sub->add_option("--side", recon.side, "Synthetic image side");
    r_sub->add_option("--method", recon.method, "topk or montecarlo")->required();
    r_sub->add_option("--k", recon.k, "Coefficient or sample budget")->required();
    r_sub->add_option("--tile", recon.tile, "Tile side for top-k; 0 = whole image");
    add_common(r_sub);

    AmplifyArgs amp;
    int amp_iterations = 0;
    auto *a_sub = app.add_subcommand("amplify", "Amplitude amplification of a Husimi region");
    add_state(a_sub, amp.state);
    a_sub->add_option("--region", amp.region, "Half-open region j0:j1,l0:l1 on the Husimi lattice")->required();
    auto *iter_opt = a_sub->add_option("--iterations", amp_iterations, "Rounds (default: optimal)");
    add_common(a_sub);

    std::vector<std::string> argv_rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(argv_rest.begin(), argv_rest.end());
    try {
        app.parse(argv_rest);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            app.exit(e);
            return kExitOk;
        }
        report_error("usage", kExitUsage, e.what());
        return kExitUsage;
    }

    try {
        json summary;
        if (*c_sub) summary = cmd_classical(classical, common);
        if (*w_sub) summary = cmd_wigner(wig, pipeline, common);
        if (*h_sub) summary = cmd_husimi(hus, common);
        if (*s_sub) {
            if (*tile_opt) scan.tile = scan_tile;
            summary = cmd_scan(scan, common);
        }
        if (*r_sub) summary = cmd_reconstruct(recon, common);
        if (*a_sub) {
            if (*iter_opt) amp.iterations = amp_iterations;
            summary = cmd_amplify(amp, common);
        }
        std::cout << summary.dump(2) << std::endl;
        return kExitOk;
    } catch (const CLI::Error &e) {
        report_error("usage", kExitUsage, e.what());
        return kExitUsage;
    } catch (const Error &e) {
        const int code = category_exit_code(e.category());
        report_error(category_name(e.category()), code, e.what());
        return code;
    } catch (const std::exception &e) {
        report_error("internal", kExitInternal, e.what());
        return kExitInternal;
    }
}

}  // namespace qphase::cli
