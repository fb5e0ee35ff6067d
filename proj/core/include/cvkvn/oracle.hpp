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
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cvkvn/density.hpp"
#include "cvkvn/kvn.hpp"
#include "cvkvn/phase_poly.hpp"

namespace cvkvn {

enum class Integrator { Leapfrog, Rk4 };

/// Time-t map of Hamilton's equations dx/dt = J dH/dx.  Gradients are
/// compiled once into floating-point evaluators.
class FlowMap {
 public:
  explicit FlowMap(ClassicalHamiltonian h, Integrator integrator = Integrator::Leapfrog, double dt = 1e-3);

  const ClassicalHamiltonian& hamiltonian() const { return h_; }
  Integrator integrator() const { return integrator_; }
  double dt() const { return dt_; }
  std::size_t dim() const { return h_.dim(); }

  /// Integrates in place over time t with ceil(|t|/dt) equal steps, so the
  /// final step lands exactly on t.  Negative t runs backward.  Throws
  /// NumericalBlowUp (index 0) on a non-finite state.
  void advance(std::span<double> x, double t) const;

  double energy(std::span<const double> x) const;
  /// dx/dt at x.
  void velocity(std::span<const double> x, std::span<double> out) const;

 private:
  void leapfrog_step(std::span<double> x, double h) const;
  void rk4_step(std::span<double> x, double h) const;

  ClassicalHamiltonian h_;
  Integrator integrator_;
  double dt_;
  NumericPolynomial energy_;
  std::vector<NumericPolynomial> grad_v_;  // dV/dx_j, j < n
  std::vector<NumericPolynomial> grad_t_;  // dT/dx_{n+j}
};

std::vector<double> flow(const FlowMap& map, std::span<const double> x0, double t);

using DensityFunction = std::function<double(std::span<const double>)>;

/// Normal density N(mean, cov) as a callable.
DensityFunction gaussian_density(const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov);

/// rho(x, t) = rho0(Phi_{-t}(x)).
double liouville_density(const FlowMap& map, const DensityFunction& rho0, double t, std::span<const double> x);

/// liouville_density at every node of the tensor grid spanned by `axes`.
DensityTable liouville_density_on_grid(const FlowMap& map, const DensityFunction& rho0, double t,
                                       const std::vector<std::vector<double>>& axes);

struct ClassicalEnsemble {
  std::vector<std::vector<double>> samples;

  std::size_t size() const { return samples.size(); }
  /// Throws unless non-empty, equal-length and finite.
  void validate() const;
  Moments moments() const;
};

/// Draws `count` points from N(mean, cov) (Cholesky factor times standard
/// normals from mt19937_64).
ClassicalEnsemble sample_gaussian(const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov, std::size_t count,
                                  std::uint64_t seed);

/// Transports every sample.  NumericalBlowUp carries the sample index.
ClassicalEnsemble ensemble_evolve(const FlowMap& map, const ClassicalEnsemble& e, double t);

struct DensityComparison {
  double total_variation = 0.0;
  std::vector<double> mean_error;  // a - b
  double mean_error_norm = 0.0;
  /// Frobenius norm of cov(a) - cov(b).
  double covariance_error = 0.0;
};

/// Throws DimensionMismatch unless same_grid(a, b).
DensityComparison compare_densities(const DensityTable& a, const DensityTable& b);

}  // namespace cvkvn
