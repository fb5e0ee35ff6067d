// Copyright 2026 The cvkvn Authors
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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cvkvn/circuit.hpp"
#include "cvkvn/density.hpp"
#include "cvkvn/kvn.hpp"

namespace cvkvn {

using Complex = std::complex<double>;

/// Uniform tensor grid over [-half_extent, half_extent) per qumode.
struct GridSpec {
  std::size_t num_modes = 1;
  std::size_t points_per_mode = 128;
  double half_extent = 8.0;
  std::size_t memory_cap_bytes = std::size_t{2} << 30;

  /// Throws std::invalid_argument: points_per_mode must be a power of two
  /// >= 16, 1 <= num_modes <= 4, half_extent > 0, state within the cap.
  void validate() const;
  double dx() const { return 2.0 * half_extent / static_cast<double>(points_per_mode); }
  /// Conjugate spacing 2 pi / (N dx).
  double dp() const;
  std::size_t total_points() const;
};

/// Wavefunction sampled on a GridSpec.  Each mode is held either on its
/// position grid (spacing dx) or, after an odd number of Fourier gates, on the
/// dual grid (spacing dp); the Fourier gate is the exact unitary DFT between
/// the two.  Amplitudes are row-major with mode 0 slowest, normalized so that
/// sum |psi|^2 * cell_volume() = 1.
class GridState {
 public:
  explicit GridState(GridSpec spec);

  const GridSpec& spec() const { return spec_; }
  std::size_t num_modes() const { return spec_.num_modes; }
  std::size_t points_per_mode() const { return spec_.points_per_mode; }

  bool is_dual(std::size_t mode) const { return dual_.at(mode); }
  double spacing(std::size_t mode) const;
  std::vector<double> coordinates(std::size_t mode) const;
  double cell_volume() const;

  std::span<Complex> amplitudes() { return amps_; }
  std::span<const Complex> amplitudes() const { return amps_; }

  double norm_squared() const;
  void normalize();

  friend class GridKernel;

 private:
  GridSpec spec_;
  std::vector<bool> dual_;
  std::vector<Complex> amps_;
};

/// Real Gaussian wavefunction psi ∝ exp(-(x-mu)^T Sigma^{-1} (x-mu) / 4), so
/// |psi|^2 is the normal density N(mu, Sigma) over the qumode positions.
/// Throws when Sigma is not symmetric positive definite or when the grid
/// covers less than 3 standard deviations around the mean on some axis.
GridState prepare_gaussian(const GridSpec& spec, const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov);

/// Smallest number of standard deviations of N(mu, Sigma) that the grid
/// covers along any coordinate axis.
double coverage_sigmas(const GridSpec& spec, const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov);

void apply_gate(GridState& state, const Gate& gate);
void run(GridState& state, const GateSequence& circuit);

/// Continuum action of exp(-i s g(X) P_mode), g = sign * factor: every fiber
/// along `mode` is translated by s * g(x_rest) through a spectral phase.
void exact_controlled_shift(GridState& state, const KvNTerm& term, double s);

/// rho(x) = |psi(x)|^2 on the current per-mode grids.
DensityTable born_density(const GridState& state);

/// Inverse-CDF sampling over the flattened cells; deterministic for a seed.
std::vector<std::vector<double>> measure_positions(const GridState& state, std::size_t num_samples,
                                                   std::uint64_t seed);

/// Probability mass within `fraction` of the extent from any grid edge.
double boundary_mass(const GridState& state, double fraction = 0.05);

Complex inner_product(const GridState& a, const GridState& b);
/// ||a - b|| / ||b|| in the grid L2 norm.
double relative_l2_error(const GridState& a, const GridState& b);

double expect_position(const GridState& state, std::size_t mode);
/// <P_mode>, evaluated spectrally.
double expect_momentum(const GridState& state, std::size_t mode);

}  // namespace cvkvn
