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

#include "qphase/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

#include "qphase/error.hpp"
#include "qphase/rng.hpp"
#include "qphase/statevec.hpp"

namespace qphase {
namespace {

using Scene = std::function<double(double, double)>;

double smoothstep(double edge0, double edge1, double x) {
    const double t = std::clamp((x - edge0) / (edge1 - edge0), 0.0, 1.0);
    return t * t * (3.0 - 2.0 * t);
}

double gauss2(double dx, double dy, double s) { return std::exp(-(dx * dx + dy * dy) / (2.0 * s * s)); }

// Head-and-shoulders figure over a soft background; mostly smooth regions.
Scene portrait_scene(std::uint64_t seed) {
    Rng rng(seed);
    const double bg_a = rng.uniform(0.25, 0.45);
    const double bg_b = rng.uniform(0.05, 0.2);
    const double cx = rng.uniform(0.45, 0.55);
    const double tilt = rng.uniform(-0.15, 0.15);
    struct Blob {
        double x, y, s, amp;
    };
    std::vector<Blob> folds(6);
    for (auto &b : folds) b = {rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0), rng.uniform(0.05, 0.15),
                               rng.uniform(-0.12, 0.12)};
    return [=](double x, double y) {
        double v = bg_a + bg_b * std::sin(2.0 * std::numbers::pi * (0.7 * x + 0.3 * y));
        for (const auto &b : folds) v += b.amp * gauss2(x - b.x, y - b.y, b.s);
        const double u = (x - cx) * std::cos(tilt) - (y - 0.4) * std::sin(tilt);
        const double w = (x - cx) * std::sin(tilt) + (y - 0.4) * std::cos(tilt);
        const double face = 1.0 - smoothstep(0.95, 1.05, std::hypot(u / 0.17, w / 0.23));
        const double shoulders = 1.0 - smoothstep(0.95, 1.05, std::hypot((x - cx) / 0.38, (y - 1.0) / 0.3));
        const double hair = (1.0 - smoothstep(0.95, 1.05, std::hypot(u / 0.21, (w + 0.06) / 0.24))) * (1.0 - face);
        v = v * (1.0 - face) + face * (0.78 + 0.08 * w);
        v = v * (1.0 - hair) + hair * 0.12;
        v = v * (1.0 - shoulders) + shoulders * (0.55 + 0.1 * std::sin(9.0 * x));
        const double eyes = gauss2(u - 0.065, w + 0.04, 0.018) + gauss2(u + 0.065, w + 0.04, 0.018);
        v -= 0.5 * eyes * face;
        v -= 0.25 * gauss2(u, (w - 0.12) * 2.5, 0.03) * face;
        return v;
    };
}

// City-block pattern: dense rectangular structure down to small scales.
Scene texture_scene(std::uint64_t seed) {
    constexpr int kBlocks = 24;
    Rng rng(seed ^ 0x7E57ULL);
    std::vector<double> height(kBlocks * kBlocks), roof(kBlocks * kBlocks);
    for (std::size_t i = 0; i < height.size(); ++i) {
        height[i] = rng.uniform(0.35, 1.0);
        roof[i] = rng.uniform(2.0, 6.0);
    }
    return [=](double x, double y) {
        const double gx = x * kBlocks, gy = y * kBlocks;
        const int bx = std::min(kBlocks - 1, static_cast<int>(gx));
        const int by = std::min(kBlocks - 1, static_cast<int>(gy));
        const double fx = gx - bx, fy = gy - by;
        const std::size_t id = static_cast<std::size_t>(by * kBlocks + bx);
        if (fx < 0.18 || fy < 0.18) return 0.12;
        const double windows = 0.5 + 0.5 * std::cos(2.0 * std::numbers::pi * roof[id] * fx) *
                                         std::cos(2.0 * std::numbers::pi * roof[id] * fy);
        return height[id] * (0.7 + 0.3 * windows);
    };
}

// Dark sky with a diffuse glow and sparse point-like sources.
Scene spots_scene(std::uint64_t seed) {
    Rng rng(seed ^ 0x5B075ULL);
    struct Star {
        double x, y, s, amp;
    };
    std::vector<Star> stars(40);
    for (auto &s : stars) {
        s = {rng.uniform(0.02, 0.98), rng.uniform(0.02, 0.98), rng.uniform(0.004, 0.012), rng.uniform(0.3, 1.0)};
    }
    const double gx = rng.uniform(0.35, 0.65), gy = rng.uniform(0.35, 0.65);
    return [=](double x, double y) {
        const double r = std::hypot(x - gx, y - gy);
        const double arm = std::atan2(y - gy, x - gx) - 9.0 * r;
        double v = 0.02 + 0.35 * std::exp(-r / 0.07) * (0.6 + 0.4 * std::cos(2.0 * arm));
        for (const auto &s : stars) v += s.amp * gauss2(x - s.x, y - s.y, s.s);
        return v;
    };
}

// Escape-time rendering of a Mandelbrot-set window.
Scene fractal_scene(std::uint64_t seed) {
    Rng rng(seed ^ 0xF4AC7ULL);
    const double cx = -0.745 + rng.uniform(-0.002, 0.002);
    const double cy = 0.11 + rng.uniform(-0.002, 0.002);
    const double span = 0.06;
    return [=](double x, double y) {
        const std::complex<double> c(cx + span * (x - 0.5), cy + span * (y - 0.5));
        std::complex<double> z = 0.0;
        constexpr int kMaxIter = 256;
        int it = 0;
        while (it < kMaxIter && std::norm(z) <= 4.0) {
            z = z * z + c;
            ++it;
        }
        if (it == kMaxIter) return 0.0;
        const double smooth = it + 1.0 - std::log2(std::log2(std::max(std::norm(z), 4.0 + 1e-12)) / 2.0 + 1e-300);
        return 0.15 + 0.85 * std::sqrt(std::clamp(smooth / 64.0, 0.0, 1.0));
    };
}

Scene make_scene(SyntheticKind kind, std::uint64_t seed) {
    switch (kind) {
    case SyntheticKind::portrait: return portrait_scene(seed);
    case SyntheticKind::texture: return texture_scene(seed);
    case SyntheticKind::spots: return spots_scene(seed);
    case SyntheticKind::fractal: return fractal_scene(seed);
    }
    fail(ErrorCategory::invalid_parameter, "unknown synthetic image kind");
}

}  // namespace

std::string kind_name(SyntheticKind kind) {
    switch (kind) {
    case SyntheticKind::portrait: return "portrait";
    case SyntheticKind::texture: return "texture";
    case SyntheticKind::spots: return "spots";
    case SyntheticKind::fractal: return "fractal";
    }
    return "unknown";
}

SyntheticKind parse_kind(const std::string &name) {
    for (auto k : {SyntheticKind::portrait, SyntheticKind::texture, SyntheticKind::spots, SyntheticKind::fractal}) {
        if (kind_name(k) == name) return k;
    }
    fail(ErrorCategory::invalid_parameter, "unknown synthetic image '" + name + "'");
}

GrayImage synthetic_image(SyntheticKind kind, std::size_t side, std::uint64_t seed) {
    if (side < 4 || !is_power_of_two(side)) {
        fail(ErrorCategory::invalid_dimension, "synthetic image side must be a power of two >= 4");
    }
    const Scene scene = make_scene(kind, seed);
    GrayImage img{side, side, 255, std::vector<std::uint8_t>(side * side)};
    const double inv = 1.0 / static_cast<double>(side);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t yy = 0; yy < static_cast<std::ptrdiff_t>(side); ++yy) {
        const auto y = static_cast<std::size_t>(yy);
        for (std::size_t x = 0; x < side; ++x) {
            const double v = scene((x + 0.5) * inv, (y + 0.5) * inv);
            img.pixels[y * side + x] = static_cast<std::uint8_t>(std::clamp(std::lround(255.0 * v), 0L, 255L));
        }
    }
    return img;
}

std::vector<NamedImage> synthetic_corpus(std::size_t side, std::uint64_t seed) {
    std::vector<NamedImage> out;
    for (auto k : {SyntheticKind::portrait, SyntheticKind::texture, SyntheticKind::spots, SyntheticKind::fractal}) {
        out.push_back({kind_name(k), synthetic_image(k, side, seed)});
    }
    return out;
}

}  // namespace qphase
