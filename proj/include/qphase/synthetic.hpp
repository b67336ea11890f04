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

#include <cstdint>
#include <string>
#include <vector>

#include "qphase/imageio.hpp"

namespace qphase {

/// Deterministic stand-ins for common benchmark image types. Each scene is a
/// continuous function on the unit square sampled at pixel centers, so the
/// same seed gives the same picture at every resolution.
enum class SyntheticKind { portrait, texture, spots, fractal };

inline constexpr std::uint64_t kDefaultImageSeed = 20080501;

std::string kind_name(SyntheticKind kind);
SyntheticKind parse_kind(const std::string &name);

GrayImage synthetic_image(SyntheticKind kind, std::size_t side, std::uint64_t seed = kDefaultImageSeed);

struct NamedImage {
    std::string name;
    GrayImage image;
};

/// All four kinds at one resolution.
std::vector<NamedImage> synthetic_corpus(std::size_t side, std::uint64_t seed = kDefaultImageSeed);

}  // namespace qphase
