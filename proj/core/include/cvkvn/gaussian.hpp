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

#include <cstddef>

#include <Eigen/Dense>

#include "cvkvn/density.hpp"
#include "cvkvn/grid.hpp"
#include "cvkvn/kvn.hpp"

namespace cvkvn {

/// Gaussian state of M qumodes in the quadrature ordering
/// (X_1, ..., X_M, P_1, ..., P_M).  `covariance` holds the symmetrized second
/// moments; the vacuum has covariance I/2.
struct GaussianState {
  Eigen::VectorXd mean;
  Eigen::MatrixXd covariance;

  std::size_t num_modes() const { return static_cast<std::size_t>(mean.size() / 2); }

  static GaussianState vacuum(std::size_t num_modes);
  /// State whose position density is N(mean_x, cov_x) with a real
  /// wavefunction: momentum covariance cov_x^{-1} / 4, no X-P correlation.
  static GaussianState from_position_density(const Eigen::VectorXd& mean_x, const Eigen::MatrixXd& cov_x);

  /// Throws unless the covariance is symmetric positive definite.
  void validate() const;

  Eigen::VectorXd position_mean() const { return mean.head(num_modes()); }
  Eigen::MatrixXd position_covariance() const {
    return covariance.topLeftCorner(num_modes(), num_modes());
  }
};

/// Affine Heisenberg generator of a quadratic KvN Hamiltonian: the
/// (2M+1) x (2M+1) matrix G with d/dt [z; 1] = G [z; 1].  Throws when a
/// generator of degree > 2 is present.
Eigen::MatrixXd kvn_flow_generator(const KvNHamiltonian& h);

/// Exact transport of mean and covariance under exp(-i t H_KvN).
GaussianState evolve_gaussian(const GaussianState& state, const KvNHamiltonian& h, double t);

/// Position density of the state evaluated at the grid nodes of `spec`.
DensityTable position_density(const GaussianState& state, const GridSpec& spec);

}  // namespace cvkvn
