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

#include "cvkvn/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "cvkvn/error.hpp"

namespace cvkvn {

namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143267794;

// FFTW plans are created under a lock (the planner is not thread-safe) and
// executed on caller-owned buffers through the new-array interface.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard lock(mu_);
    auto key = std::make_pair(n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    auto* buf = fftw_alloc_complex(n);
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign, FFTW_ESTIMATE);
    fftw_free(buf);
    plans_.emplace(key, p);
    return p;
  }

  PlanCache(const PlanCache&) = delete;
  PlanCache& operator=(const PlanCache&) = delete;

 private:
  PlanCache() = default;
  ~PlanCache() {
    for (auto& [k, p] : plans_) fftw_destroy_plan(p);
  }
  std::mutex mu_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

struct FftwBuffer {
  explicit FftwBuffer(std::size_t n) : n(n), data(fftw_alloc_complex(n)) {
    if (!data) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  Complex* begin() { return reinterpret_cast<Complex*>(data); }
  Complex& operator[](std::size_t i) { return begin()[i]; }
  std::size_t n;
  fftw_complex* data;
};

// Centered DFT on a fiber: out_m = scale * (-1)^m sum_k e^{sign 2 pi i m k / N} (-1)^k in_k,
// which equals scale * sum_k e^{sign i (m - N/2)(k - N/2) 2 pi / N} in_k for N/2 even.
void centered_dft(FftwBuffer& buf, int sign, double scale) {
  const std::size_t n = buf.n;
  for (std::size_t k = 1; k < n; k += 2) buf[k] = -buf[k];
  fftw_execute_dft(PlanCache::instance().get(n, sign), buf.data, buf.data);
  for (std::size_t m = 0; m < n; ++m) buf[m] *= (m % 2 ? -scale : scale);
}

}  // namespace

// Internal access to GridState plus the fiber and diagonal loops.
class GridKernel {
 public:
  explicit GridKernel(GridState& s) : s_(s), n_(s.points_per_mode()), modes_(s.num_modes()) {
    for (std::size_t m = 0; m < modes_; ++m) coords_.push_back(s.coordinates(m));
  }

  void toggle_dual(std::size_t mode) {
    s_.dual_[mode] = !s_.dual_[mode];
    coords_[mode] = s_.coordinates(mode);
  }

  // fn(x) -> phase; multiplies psi(x) by e^{i phase}.
  template <class Fn>
  void diagonal(Fn&& fn) {
    std::vector<std::size_t> idx(modes_, 0);
    std::vector<double> x(modes_);
    for (std::size_t m = 0; m < modes_; ++m) x[m] = coords_[m][0];
    auto amps = s_.amplitudes();
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
      amps[flat] *= std::polar(1.0, fn(x.data()));
      for (std::size_t m = modes_; m-- > 0;) {
        if (++idx[m] < n_) {
          x[m] = coords_[m][idx[m]];
          break;
        }
        idx[m] = 0;
        x[m] = coords_[m][0];
      }
    }
  }

  // fn(FftwBuffer& fiber, const double* x) operates on each fiber along
  // `axis`; x holds the coordinates of the other modes (x[axis] is unset).
  template <class Fn>
  void fibers(std::size_t axis, Fn&& fn) {
    std::size_t stride = 1;
    for (std::size_t m = axis + 1; m < modes_; ++m) stride *= n_;
    std::size_t outer = 1;
    for (std::size_t m = 0; m < axis; ++m) outer *= n_;
    FftwBuffer buf(n_);
    std::vector<double> x(modes_, 0.0);
    auto amps = s_.amplitudes();
    for (std::size_t o = 0; o < outer; ++o) {
      std::size_t rem = o;
      for (std::size_t m = axis; m-- > 0;) {
        x[m] = coords_[m][rem % n_];
        rem /= n_;
      }
      for (std::size_t i = 0; i < stride; ++i) {
        rem = i;
        for (std::size_t m = modes_; m-- > axis + 1;) {
          x[m] = coords_[m][rem % n_];
          rem /= n_;
        }
        const std::size_t base = o * n_ * stride + i;
        for (std::size_t k = 0; k < n_; ++k) buf[k] = amps[base + k * stride];
        fn(buf, x.data());
        for (std::size_t k = 0; k < n_; ++k) amps[base + k * stride] = buf[k];
      }
    }
  }

  void scale(Complex c) {
    for (auto& a : s_.amplitudes()) a *= c;
  }

  // Multiplies each fiber's momentum representation by e^{i phase(p, x)}.
  template <class Fn>
  void momentum_phase(std::size_t axis, Fn&& phase) {
    const double dx = s_.spacing(axis);
    const double dp = 2.0 * std::numbers::pi / (static_cast<double>(n_) * dx);
    std::vector<double> p(n_);
    for (std::size_t m = 0; m < n_; ++m) p[m] = (static_cast<double>(m) - static_cast<double>(n_) / 2) * dp;
    fibers(axis, [&](FftwBuffer& buf, const double* x) {
      centered_dft(buf, FFTW_FORWARD, dx * kInvSqrt2Pi);
      for (std::size_t m = 0; m < n_; ++m) buf[m] *= std::polar(1.0, phase(p[m], x));
      centered_dft(buf, FFTW_BACKWARD, dp * kInvSqrt2Pi);
    });
  }

  // F: kernel e^{+iux}; F^dagger: kernel e^{-iux}.  Both swap the mode
  // between its position and dual grids.
  void fourier(std::size_t axis, bool inverse, Complex global_phase = 1.0) {
    const double scale = s_.spacing(axis) * kInvSqrt2Pi;
    fibers(axis, [&](FftwBuffer& buf, const double*) {
      centered_dft(buf, inverse ? FFTW_FORWARD : FFTW_BACKWARD, scale);
      if (global_phase != 1.0)
        for (std::size_t m = 0; m < n_; ++m) buf[m] *= global_phase;
    });
    toggle_dual(axis);
  }

 private:
  GridState& s_;
  std::size_t n_;
  std::size_t modes_;
  std::vector<std::vector<double>> coords_;
};

void GridSpec::validate() const {
  if (num_modes < 1 || num_modes > 4)
    throw std::invalid_argument("grid: num_modes must be between 1 and 4, got " + std::to_string(num_modes));
  if (points_per_mode < 16 || (points_per_mode & (points_per_mode - 1)) != 0)
    throw std::invalid_argument("grid: points_per_mode must be a power of two >= 16, got " +
                                std::to_string(points_per_mode));
  if (!(half_extent > 0.0) || !std::isfinite(half_extent))
    throw std::invalid_argument("grid: half_extent must be positive");
  const double bytes = std::pow(static_cast<double>(points_per_mode), static_cast<double>(num_modes)) *
                       static_cast<double>(sizeof(Complex));
  if (bytes > static_cast<double>(memory_cap_bytes))
    throw std::invalid_argument("grid: state needs " + std::to_string(static_cast<long long>(bytes)) +
                                " bytes, above the memory cap of " + std::to_string(memory_cap_bytes));
}

double GridSpec::dp() const { return 2.0 * std::numbers::pi / (static_cast<double>(points_per_mode) * dx()); }

std::size_t GridSpec::total_points() const {
  std::size_t t = 1;
  for (std::size_t m = 0; m < num_modes; ++m) t *= points_per_mode;
  return t;
}

GridState::GridState(GridSpec spec) : spec_(spec) {
  spec_.validate();
  dual_.assign(spec_.num_modes, false);
  amps_.assign(spec_.total_points(), Complex(0.0, 0.0));
}

double GridState::spacing(std::size_t mode) const { return is_dual(mode) ? spec_.dp() : spec_.dx(); }

std::vector<double> GridState::coordinates(std::size_t mode) const {
  const double d = spacing(mode);
  const std::size_t n = points_per_mode();
  std::vector<double> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = (static_cast<double>(k) - static_cast<double>(n) / 2) * d;
  return x;
}

double GridState::cell_volume() const {
  double v = 1.0;
  for (std::size_t m = 0; m < num_modes(); ++m) v *= spacing(m);
  return v;
}

double GridState::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s * cell_volume();
}

void GridState::normalize() {
  const double n2 = norm_squared();
  if (!(n2 > 0.0)) throw std::domain_error("cannot normalize a zero state");
  const double f = 1.0 / std::sqrt(n2);
  for (auto& a : amps_) a *= f;
}

double coverage_sigmas(const GridSpec& spec, const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov) {
  double worst = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < mean.size(); ++i) {
    const double sigma = std::sqrt(cov(i, i));
    // Grid nodes span [-L, L - dx].
    const double lo = (mean(i) + spec.half_extent) / sigma;
    const double hi = (spec.half_extent - spec.dx() - mean(i)) / sigma;
    worst = std::min({worst, lo, hi});
  }
  return worst;
}

GridState prepare_gaussian(const GridSpec& spec, const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov) {
  const auto m = static_cast<Eigen::Index>(spec.num_modes);
  if (mean.size() != m || cov.rows() != m || cov.cols() != m)
    throw DimensionMismatch("prepare_gaussian: mean/covariance must match the number of qumodes");
  if (!cov.isApprox(cov.transpose(), 1e-12)) throw std::invalid_argument("prepare_gaussian: covariance not symmetric");
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) throw std::invalid_argument("prepare_gaussian: covariance not positive definite");
  if (coverage_sigmas(spec, mean, cov) < 3.0)
    throw std::invalid_argument("prepare_gaussian: grid covers less than 3 standard deviations of the density");
  const Eigen::MatrixXd precision = llt.solve(Eigen::MatrixXd::Identity(m, m));

  GridState state(spec);
  Eigen::VectorXd d(m);
  std::vector<std::size_t> idx(spec.num_modes, 0);
  std::vector<std::vector<double>> coords;
  for (std::size_t k = 0; k < spec.num_modes; ++k) coords.push_back(state.coordinates(k));
  auto amps = state.amplitudes();
  for (std::size_t flat = 0; flat < amps.size(); ++flat) {
    for (Eigen::Index k = 0; k < m; ++k) d(k) = coords[k][idx[k]] - mean(k);
    amps[flat] = std::exp(-0.25 * d.dot(precision * d));
    for (std::size_t k = spec.num_modes; k-- > 0;) {
      if (++idx[k] < spec.points_per_mode) break;
      idx[k] = 0;
    }
  }
  state.normalize();
  return state;
}

namespace {

void apply_rotation(GridKernel& kernel, std::size_t mode, double angle) {
  constexpr double half_pi = std::numbers::pi / 2;
  // exp(i 2 pi (X^2 + P^2) / 2) = -1, so each full turn removed flips the sign.
  const double turns = std::round(angle / (2.0 * std::numbers::pi));
  double s = angle - turns * 2.0 * std::numbers::pi;  // [-pi, pi]
  const bool odd_turns = std::fmod(std::abs(turns), 2.0) == 1.0;
  Complex phase = odd_turns ? -1.0 : 1.0;
  // R(+-pi/2) = e^{+-i pi/4} F^(dagger); peel quarter turns until the
  // three-shear split is regular (|s| < pi/2).
  while (std::abs(s) >= half_pi) {
    const bool positive = s > 0;
    kernel.fourier(mode, !positive, phase * std::polar(1.0, positive ? std::numbers::pi / 4 : -std::numbers::pi / 4));
    phase = 1.0;
    s += positive ? -half_pi : half_pi;
  }
  if (phase != 1.0) kernel.scale(phase);
  if (s == 0.0) return;
  const double t = std::tan(s / 2), sn = std::sin(s);
  kernel.diagonal([&](const double* x) { return 0.5 * t * x[mode] * x[mode]; });
  kernel.momentum_phase(mode, [&](double p, const double*) { return 0.5 * sn * p * p; });
  kernel.diagonal([&](const double* x) { return 0.5 * t * x[mode] * x[mode]; });
}

}  // namespace

void apply_gate(GridState& state, const Gate& gate) {
  gate.validate(state.num_modes());
  GridKernel kernel(state);
  const std::size_t j = gate.modes[0], k = gate.modes[1];
  const double s = gate.param;
  switch (gate.kind) {
    case GateKind::MomentumDisplacement:
      kernel.diagonal([&](const double* x) { return s * x[j]; });
      break;
    case GateKind::QuadraticPhase:
      kernel.diagonal([&](const double* x) { return s * x[j] * x[j] / 2; });
      break;
    case GateKind::CubicPhase:
      kernel.diagonal([&](const double* x) { return s * x[j] * x[j] * x[j] / 3; });
      break;
    case GateKind::QuarticPhase:
      kernel.diagonal([&](const double* x) {
        const double x2 = x[j] * x[j];
        return s * x2 * x2;
      });
      break;
    case GateKind::ControlledZ:
      kernel.diagonal([&](const double* x) { return s * x[j] * x[k]; });
      break;
    case GateKind::ControlledX:
      // exp(-i s X_j P_k): translate x_k by s x_j.
      kernel.momentum_phase(k, [&](double p, const double* x) { return -s * x[j] * p; });
      break;
    case GateKind::Fourier:
      kernel.fourier(j, false);
      break;
    case GateKind::FourierInverse:
      kernel.fourier(j, true);
      break;
    case GateKind::Rotation:
      apply_rotation(kernel, j, s);
      break;
  }
}

void run(GridState& state, const GateSequence& circuit) {
  if (circuit.num_modes() != state.num_modes())
    throw DimensionMismatch("circuit and state have different qumode counts");
  for (const auto& g : circuit.gates()) apply_gate(state, g);
}

void exact_controlled_shift(GridState& state, const KvNTerm& term, double s) {
  if (term.factor.num_vars() != state.num_modes())
    throw DimensionMismatch("controlled shift: factor variables must match the qumode count");
  if (term.mode >= state.num_modes()) throw std::out_of_range("controlled shift: mode out of range");
  if (term.factor.depends_on(term.mode))
    throw std::invalid_argument("controlled shift: factor depends on the shifted coordinate");
  if (!std::isfinite(s)) throw std::invalid_argument("controlled shift: strength must be finite");
  const NumericPolynomial g(term.coefficient());
  const std::size_t j = term.mode;
  const std::size_t modes = state.num_modes();
  GridKernel kernel(state);
  kernel.momentum_phase(j, [&](double p, const double* x) {
    return -s * g(std::span<const double>(x, modes)) * p;
  });
}

DensityTable born_density(const GridState& state) {
  DensityTable d;
  for (std::size_t m = 0; m < state.num_modes(); ++m) d.axes.push_back(state.coordinates(m));
  d.values.reserve(state.amplitudes().size());
  for (const auto& a : state.amplitudes()) d.values.push_back(std::norm(a));
  return d;
}

std::vector<std::vector<double>> measure_positions(const GridState& state, std::size_t num_samples,
                                                   std::uint64_t seed) {
  if (num_samples == 0) throw std::invalid_argument("measure_positions: need at least one sample");
  const DensityTable d = born_density(state);
  std::vector<double> cdf(d.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) cdf[i] = acc += d.values[i];
  if (!(acc > 0.0)) throw std::domain_error("measure_positions: state has no mass");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> out;
  out.reserve(num_samples);
  for (std::size_t s = 0; s < num_samples; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t cell = static_cast<std::size_t>(std::min<std::ptrdiff_t>(it - cdf.begin(), cdf.size() - 1));
    // Skip zero-mass cells that upper_bound can land on at the top end.
    while (d.values[cell] == 0.0 && cell > 0) --cell;
    out.push_back(d.point(cell));
  }
  return out;
}

double boundary_mass(const GridState& state, double fraction) {
  const std::size_t n = state.points_per_mode();
  const auto band = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n)));
  std::vector<std::size_t> idx(state.num_modes(), 0);
  double mass = 0.0;
  auto amps = state.amplitudes();
  for (std::size_t flat = 0; flat < amps.size(); ++flat) {
    bool edge = false;
    for (std::size_t i : idx) edge = edge || i < band || i >= n - band;
    if (edge) mass += std::norm(amps[flat]);
    for (std::size_t k = idx.size(); k-- > 0;) {
      if (++idx[k] < n) break;
      idx[k] = 0;
    }
  }
  return mass * state.cell_volume();
}

Complex inner_product(const GridState& a, const GridState& b) {
  if (a.amplitudes().size() != b.amplitudes().size())
    throw DimensionMismatch("inner_product: states have different sizes");
  for (std::size_t m = 0; m < a.num_modes(); ++m)
    if (a.is_dual(m) != b.is_dual(m) || a.spacing(m) != b.spacing(m))
      throw DimensionMismatch("inner_product: states live on different grids");
  Complex s = 0.0;
  auto pa = a.amplitudes(), pb = b.amplitudes();
  for (std::size_t i = 0; i < pa.size(); ++i) s += std::conj(pa[i]) * pb[i];
  return s * a.cell_volume();
}

double relative_l2_error(const GridState& a, const GridState& b) {
  const double nb = inner_product(b, b).real();
  double diff = 0.0;
  auto pa = a.amplitudes(), pb = b.amplitudes();
  for (std::size_t i = 0; i < pa.size(); ++i) diff += std::norm(pa[i] - pb[i]);
  return std::sqrt(diff * a.cell_volume() / nb);
}

double expect_position(const GridState& state, std::size_t mode) {
  if (mode >= state.num_modes()) throw std::out_of_range("expect_position: mode out of range");
  const DensityTable d = born_density(state);
  return moments_of(d).mean[mode];
}

double expect_momentum(const GridState& state, std::size_t mode) {
  if (mode >= state.num_modes()) throw std::out_of_range("expect_momentum: mode out of range");
  GridState copy = state;
  GridKernel kernel(copy);
  // F^dagger maps a position wavefunction to psi~(p) sampled at p = u.
  kernel.fourier(mode, true);
  return expect_position(copy, mode);
}

}  // namespace cvkvn
