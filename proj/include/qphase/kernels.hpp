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

// Data-parallel inner loops. Every kernel in `qphase::kernels` has a
// single-threaded counterpart in `qphase::kernels::serial` written for
// clarity rather than speed (direct O(N^2) sums instead of FFTs where that
// applies). The tests check the two against each other and the benchmark
// target times them.

#include <cstddef>
#include <span>

#include "qphase/grid.hpp"
#include "qphase/statevec.hpp"

namespace qphase {

struct PhasePoint;

namespace kernels {

/// Unitary DFT of every contiguous block of `block` samples, in place.
void block_dft(std::span<cplx> data, std::size_t block, Direction direction);

/// Unnormalized DFT (sum without 1/sqrt(N)) of one contiguous sequence.
void dft_unnormalized(std::span<cplx> data, Direction direction);

/// data[i] *= phases[i % phases.size()].
void multiply_phases(std::span<cplx> data, std::span<const cplx> phases);

/// The distinct (2N x N) block of the discrete Wigner function of an angle
/// representation `psi`. Row Theta, column n. Returns max |imaginary part|
/// encountered before taking the real part.
double wigner_block(std::span<const cplx> psi, Grid2D<double> &block);

/// One D4 analysis (or synthesis) level on the leading `length` samples.
/// `scratch` must hold at least `length` doubles.
void d4_level(std::span<double> x, std::size_t length, bool inverse, std::span<double> scratch);

/// Separable pyramidal D4 on a square region [0,side) x [0,side) of `g`
/// starting at (row0, col0).
void d4_square(Grid2D<double> &g, std::size_t row0, std::size_t col0, std::size_t side,
               int levels, bool inverse);

/// Independent full-depth D4 on each tile.
void d4_tiles(Grid2D<double> &g, std::size_t tile, int levels, bool inverse);

void standard_map_step(std::span<PhasePoint> points, double K);

/// |<phi_c | psi>|^2 for each Gaussian coherent state center c = (theta0, n0)
/// with periodically wrapped envelope of width `a`.
void gaussian_overlaps(std::span<const cplx> psi, std::span<const double> theta0,
                       std::span<const double> n0, double a, std::span<double> out);

namespace serial {

void block_dft(std::span<cplx> data, std::size_t block, Direction direction);
void dft_unnormalized(std::span<cplx> data, Direction direction);
void multiply_phases(std::span<cplx> data, std::span<const cplx> phases);
double wigner_block(std::span<const cplx> psi, Grid2D<double> &block);
void d4_square(Grid2D<double> &g, std::size_t row0, std::size_t col0, std::size_t side,
               int levels, bool inverse);
void d4_tiles(Grid2D<double> &g, std::size_t tile, int levels, bool inverse);
void standard_map_step(std::span<PhasePoint> points, double K);
void gaussian_overlaps(std::span<const cplx> psi, std::span<const double> theta0,
                       std::span<const double> n0, double a, std::span<double> out);

}  // namespace serial
}  // namespace kernels

namespace detail {

/// In-place unnormalized FFT through a cached FFTW plan. Safe to call from
/// several threads at once.
void fft_inplace(cplx *data, std::size_t n, Direction direction);

/// Coefficients of the 4-tap Daubechies scaling filter; checked against the
/// filter identities on first use.
struct D4Filter {
    double h[4];
    double g[4];
};
const D4Filter &d4_filter();

/// e^{i pi k / m} with k reduced modulo 2m in integer arithmetic.
cplx exp_i_pi_ratio(long long k, long long m);

}  // namespace detail
}  // namespace qphase
