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

#include "cvkvn/oracle.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "cvkvn/error.hpp"

namespace cvkvn {

FlowMap::FlowMap(ClassicalHamiltonian h, Integrator integrator, double dt)
    : h_(std::move(h)), integrator_(integrator), dt_(dt), energy_(h_.total()) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("flow map: dt must be positive");
  const std::size_t n = h_.n();
  for (std::size_t j = 0; j < n; ++j) {
    grad_v_.emplace_back(h_.potential().derivative(j));
    grad_t_.emplace_back(h_.kinetic().derivative(n + j));
  }
}

double FlowMap::energy(std::span<const double> x) const { return energy_(x); }

void FlowMap::velocity(std::span<const double> x, std::span<double> out) const {
  const std::size_t n = h_.n();
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = grad_t_[j](x);
    out[n + j] = -grad_v_[j](x);
  }
}

void FlowMap::leapfrog_step(std::span<double> x, double h) const {
  const std::size_t n = h_.n();
  double kick[8];
  for (std::size_t j = 0; j < n; ++j) kick[j] = grad_v_[j](x);
  for (std::size_t j = 0; j < n; ++j) x[n + j] -= 0.5 * h * kick[j];
  for (std::size_t j = 0; j < n; ++j) kick[j] = grad_t_[j](x);
  for (std::size_t j = 0; j < n; ++j) x[j] += h * kick[j];
  for (std::size_t j = 0; j < n; ++j) kick[j] = grad_v_[j](x);
  for (std::size_t j = 0; j < n; ++j) x[n + j] -= 0.5 * h * kick[j];
}

void FlowMap::rk4_step(std::span<double> x, double h) const {
  const std::size_t d = dim();
  std::vector<double> k1(d), k2(d), k3(d), k4(d), y(d);
  velocity(x, k1);
  for (std::size_t i = 0; i < d; ++i) y[i] = x[i] + 0.5 * h * k1[i];
  velocity(y, k2);
  for (std::size_t i = 0; i < d; ++i) y[i] = x[i] + 0.5 * h * k2[i];
  velocity(y, k3);
  for (std::size_t i = 0; i < d; ++i) y[i] = x[i] + h * k3[i];
  velocity(y, k4);
  for (std::size_t i = 0; i < d; ++i) x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

void FlowMap::advance(std::span<double> x, double t) const {
  if (x.size() != dim()) throw DimensionMismatch("flow: point has the wrong dimension");
  if (!std::isfinite(t)) throw std::invalid_argument("flow: time must be finite");
  for (double v : x)
    if (!std::isfinite(v)) throw NumericalBlowUp("flow: initial point is not finite", 0);
  if (t == 0.0) return;
  if (h_.n() > 8) throw DimensionMismatch("flow: at most 8 degrees of freedom");
  const auto steps = static_cast<std::size_t>(std::ceil(std::abs(t) / dt_));
  const double h = t / static_cast<double>(steps);
  for (std::size_t s = 0; s < steps; ++s) {
    if (integrator_ == Integrator::Leapfrog)
      leapfrog_step(x, h);
    else
      rk4_step(x, h);
    for (double v : x)
      if (!std::isfinite(v)) throw NumericalBlowUp("flow: trajectory diverged at step " + std::to_string(s + 1), 0);
  }
}

std::vector<double> flow(const FlowMap& map, std::span<const double> x0, double t) {
  std::vector<double> x(x0.begin(), x0.end());
  map.advance(x, t);
  return x;
}

DensityFunction gaussian_density(const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov) {
  const Eigen::Index d = mean.size();
  if (cov.rows() != d || cov.cols() != d) throw DimensionMismatch("gaussian density: shape mismatch");
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) throw std::invalid_argument("gaussian density: covariance not positive definite");
  const Eigen::MatrixXd precision = llt.solve(Eigen::MatrixXd::Identity(d, d));
  const double log_det = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
  const double norm = std::exp(-0.5 * (static_cast<double>(d) * std::log(2.0 * std::numbers::pi) + log_det));
  return [mean, precision, norm](std::span<const double> x) {
    const Eigen::Index d = mean.size();
    if (static_cast<Eigen::Index>(x.size()) != d) throw DimensionMismatch("gaussian density: point dimension");
    Eigen::VectorXd y(d);
    for (Eigen::Index i = 0; i < d; ++i) y(i) = x[i] - mean(i);
    return norm * std::exp(-0.5 * y.dot(precision * y));
  };
}

double liouville_density(const FlowMap& map, const DensityFunction& rho0, double t, std::span<const double> x) {
  return rho0(flow(map, x, -t));
}

DensityTable liouville_density_on_grid(const FlowMap& map, const DensityFunction& rho0, double t,
                                       const std::vector<std::vector<double>>& axes) {
  if (axes.size() != map.dim()) throw DimensionMismatch("liouville density: grid dimension differs from phase space");
  DensityTable d;
  d.axes = axes;
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.size();
  d.values.resize(total);
  std::vector<double> x(axes.size());
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (std::size_t k = axes.size(); k-- > 0;) {
      x[k] = axes[k][rem % axes[k].size()];
      rem /= axes[k].size();
    }
    try {
      d.values[flat] = liouville_density(map, rho0, t, x);
    } catch (const NumericalBlowUp& e) {
      throw NumericalBlowUp(e.what(), flat);
    }
  }
  return d;
}

void ClassicalEnsemble::validate() const {
  if (samples.empty()) throw std::invalid_argument("ensemble: no samples");
  const std::size_t d = samples.front().size();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].size() != d) throw DimensionMismatch("ensemble: samples differ in dimension");
    for (double v : samples[i])
      if (!std::isfinite(v)) throw NumericalBlowUp("ensemble: sample " + std::to_string(i) + " is not finite", i);
  }
}

Moments ClassicalEnsemble::moments() const {
  validate();
  const std::size_t d = samples.front().size();
  const double count = static_cast<double>(samples.size());
  Moments m;
  m.mean.assign(d, 0.0);
  for (const auto& s : samples)
    for (std::size_t i = 0; i < d; ++i) m.mean[i] += s[i];
  for (auto& v : m.mean) v /= count;
  m.covariance.assign(d * d, 0.0);
  for (const auto& s : samples)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m.covariance[i * d + j] += (s[i] - m.mean[i]) * (s[j] - m.mean[j]);
  for (auto& v : m.covariance) v /= count;
  return m;
}

ClassicalEnsemble sample_gaussian(const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov, std::size_t count,
                                  std::uint64_t seed) {
  if (count == 0) throw std::invalid_argument("sample_gaussian: count must be positive");
  const Eigen::Index d = mean.size();
  if (cov.rows() != d || cov.cols() != d) throw DimensionMismatch("sample_gaussian: shape mismatch");
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) throw std::invalid_argument("sample_gaussian: covariance not positive definite");
  const Eigen::MatrixXd l = llt.matrixL();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  ClassicalEnsemble e;
  e.samples.reserve(count);
  Eigen::VectorXd z(d);
  for (std::size_t s = 0; s < count; ++s) {
    for (Eigen::Index i = 0; i < d; ++i) z(i) = normal(rng);
    const Eigen::VectorXd x = mean + l * z;
    e.samples.emplace_back(x.data(), x.data() + d);
  }
  return e;
}

ClassicalEnsemble ensemble_evolve(const FlowMap& map, const ClassicalEnsemble& e, double t) {
  e.validate();
  ClassicalEnsemble out = e;
  for (std::size_t i = 0; i < out.samples.size(); ++i) {
    try {
      map.advance(out.samples[i], t);
    } catch (const NumericalBlowUp& err) {
      throw NumericalBlowUp("ensemble sample " + std::to_string(i) + ": " + err.what(), i);
    }
  }
  return out;
}

DensityComparison compare_densities(const DensityTable& a, const DensityTable& b) {
  if (!same_grid(a, b)) throw DimensionMismatch("compare_densities: densities live on different grids");
  DensityComparison c;
  double l1 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) l1 += std::abs(a.values[i] - b.values[i]);
  c.total_variation = 0.5 * l1 * a.cell_volume();
  const Moments ma = moments_of(a), mb = moments_of(b);
  double sq = 0.0;
  for (std::size_t i = 0; i < ma.mean.size(); ++i) {
    c.mean_error.push_back(ma.mean[i] - mb.mean[i]);
    sq += c.mean_error.back() * c.mean_error.back();
  }
  c.mean_error_norm = std::sqrt(sq);
  sq = 0.0;
  for (std::size_t i = 0; i < ma.covariance.size(); ++i) {
    const double diff = ma.covariance[i] - mb.covariance[i];
    sq += diff * diff;
  }
  c.covariance_error = std::sqrt(sq);
  return c;
}

}  // namespace cvkvn
