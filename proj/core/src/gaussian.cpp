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

#include "cvkvn/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "cvkvn/error.hpp"

namespace cvkvn {

GaussianState GaussianState::vacuum(std::size_t num_modes) {
  const auto d = static_cast<Eigen::Index>(2 * num_modes);
  return {Eigen::VectorXd::Zero(d), 0.5 * Eigen::MatrixXd::Identity(d, d)};
}

GaussianState GaussianState::from_position_density(const Eigen::VectorXd& mean_x, const Eigen::MatrixXd& cov_x) {
  const Eigen::Index m = mean_x.size();
  if (cov_x.rows() != m || cov_x.cols() != m) throw DimensionMismatch("from_position_density: shape mismatch");
  Eigen::LLT<Eigen::MatrixXd> llt(cov_x);
  if (llt.info() != Eigen::Success) throw std::invalid_argument("from_position_density: covariance not positive definite");
  GaussianState s;
  s.mean = Eigen::VectorXd::Zero(2 * m);
  s.mean.head(m) = mean_x;
  s.covariance = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  s.covariance.topLeftCorner(m, m) = cov_x;
  s.covariance.bottomRightCorner(m, m) = 0.25 * llt.solve(Eigen::MatrixXd::Identity(m, m));
  return s;
}

void GaussianState::validate() const {
  if (mean.size() == 0 || mean.size() % 2 != 0) throw DimensionMismatch("gaussian state: mean must have even length");
  if (covariance.rows() != mean.size() || covariance.cols() != mean.size())
    throw DimensionMismatch("gaussian state: covariance shape does not match the mean");
  if (!covariance.isApprox(covariance.transpose(), 1e-12))
    throw std::invalid_argument("gaussian state: covariance not symmetric");
  Eigen::LLT<Eigen::MatrixXd> llt(covariance);
  if (llt.info() != Eigen::Success) throw std::invalid_argument("gaussian state: covariance not positive definite");
}

Eigen::MatrixXd kvn_flow_generator(const KvNHamiltonian& h) {
  const auto m = static_cast<Eigen::Index>(h.num_modes());
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2 * m + 1, 2 * m + 1);
  for (const auto& term : h.terms) {
    if (term.generator_degree() > 2)
      throw std::invalid_argument("gaussian backend: generator of degree " + std::to_string(term.generator_degree()) +
                                  " on mode " + std::to_string(term.mode + 1) + " is not quadratic");
    const auto target = static_cast<Eigen::Index>(term.mode);
    for (const auto& [mono, c] : term.coefficient().terms()) {
      const double coef = to_double(c);
      Eigen::Index k = -1;
      for (std::size_t v = 0; v < mono.size(); ++v)
        if (mono[v] != 0) k = static_cast<Eigen::Index>(v);
      if (k < 0) {
        // c P_m translates X_m at unit rate c.
        g(target, 2 * m) += coef;
      } else {
        // c X_k P_m: dX_m/dt = c X_k, dP_k/dt = -c P_m.
        g(target, k) += coef;
        g(m + k, m + target) -= coef;
      }
    }
  }
  return g;
}

GaussianState evolve_gaussian(const GaussianState& state, const KvNHamiltonian& h, double t) {
  state.validate();
  if (state.num_modes() != h.num_modes())
    throw DimensionMismatch("evolve_gaussian: state has " + std::to_string(state.num_modes()) +
                            " qumodes, Hamiltonian has " + std::to_string(h.num_modes()));
  const Eigen::MatrixXd phi = (t * kvn_flow_generator(h)).exp();
  const Eigen::Index d = state.mean.size();
  const Eigen::MatrixXd a = phi.topLeftCorner(d, d);
  GaussianState out;
  out.mean = a * state.mean + phi.topRightCorner(d, 1);
  out.covariance = a * state.covariance * a.transpose();
  out.covariance = 0.5 * (out.covariance + out.covariance.transpose()).eval();
  return out;
}

DensityTable position_density(const GaussianState& state, const GridSpec& spec) {
  state.validate();
  if (spec.num_modes != state.num_modes()) throw DimensionMismatch("position_density: grid and state mode counts differ");
  const Eigen::VectorXd mu = state.position_mean();
  const Eigen::MatrixXd cov = state.position_covariance();
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) throw std::invalid_argument("position_density: degenerate position covariance");
  const auto m = mu.size();
  const double log_det = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
  const double norm = std::exp(-0.5 * (static_cast<double>(m) * std::log(2.0 * std::numbers::pi) + log_det));

  DensityTable d;
  const GridState grid(spec);
  for (std::size_t k = 0; k < spec.num_modes; ++k) d.axes.push_back(grid.coordinates(k));
  d.values.resize(spec.total_points());
  std::vector<std::size_t> idx(spec.num_modes, 0);
  Eigen::VectorXd x(m);
  for (std::size_t flat = 0; flat < d.values.size(); ++flat) {
    for (Eigen::Index k = 0; k < m; ++k) x(k) = d.axes[k][idx[k]] - mu(k);
    d.values[flat] = norm * std::exp(-0.5 * x.dot(llt.solve(x)));
    for (std::size_t k = spec.num_modes; k-- > 0;) {
      if (++idx[k] < spec.points_per_mode) break;
      idx[k] = 0;
    }
  }
  return d;
}

}  // namespace cvkvn
