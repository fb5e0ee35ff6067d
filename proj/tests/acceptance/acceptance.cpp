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

// Acceptance suite.  Prints one line per criterion:
//
//   [PASS] 3 harmonic oscillator, gaussian backend: ... (0.001 s, limit 1 s)
//
// and exits nonzero when any criterion fails.  Pass criterion numbers as
// arguments to run a subset.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cvkvn/gaussian.hpp"
#include "cvkvn/grid.hpp"
#include "cvkvn/identities.hpp"
#include "cvkvn/kvn.hpp"
#include "cvkvn/oracle.hpp"
#include "cvkvn/synth.hpp"

namespace {

using namespace cvkvn;

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

GridSpec grid(std::size_t modes, std::size_t points, double half_extent) {
  GridSpec s;
  s.num_modes = modes;
  s.points_per_mode = points;
  s.half_extent = half_extent;
  return s;
}

ClassicalHamiltonian harmonic() {
  return validate_separation(PhasePolynomial::parse("1/2*x2^2 + 1/2*x1^2", 2), 1);
}

// ---------------------------------------------------------------------------

Outcome symbolic_identities() {
  int passed = 0, total = 0, depth_ok = 0;
  for (const auto& t : admissible_triples()) {
    const KeyDecompositionReport r = verify_key_decomposition(t[0], t[1], t[2]);
    ++total;
    passed += r.passed();
    // Each conjugation cascade stops by the (a+1)-th nested commutator.
    depth_ok += r.max_depth() <= r.degree;
  }
  return {passed == total && depth_ok == total,
          std::to_string(passed) + "/" + std::to_string(total) + " ordered triples exact (" +
              std::to_string(canonical_triples().size()) + " canonical), depth <= a in " + std::to_string(depth_ok) +
              "/" + std::to_string(total)};
}

Outcome expansion_identity() {
  int passed = 0, total = 0;
  for (const auto& t : admissible_triples()) {
    const int a = 1 + t[0] + t[1] + t[2];
    PhasePolynomial sum(4);
    for (const auto& term : expansion_coefficients(t[0], t[1], t[2])) {
      PhasePolynomial lin(4);
      for (std::size_t i = 0; i < 4; ++i) {
        Monomial m(4, 0);
        m[i] = 1;
        lin.add_term(m, Rational(term.weights[i]));
      }
      sum += lin.pow(a) * term.coefficient;
    }
    ++total;
    passed += sum == PhasePolynomial::monomial(4, {1, t[0], t[1], t[2]});
  }
  return {passed == total, std::to_string(passed) + "/" + std::to_string(total) + " triples reproduce x1 x2^a2 x3^a3 x4^a4 exactly"};
}

Outcome harmonic_gaussian() {
  const KvNHamiltonian h = build_kvn(harmonic());
  const GaussianState s0 = GaussianState::from_position_density(vec({1, 0}), Eigen::Matrix2d::Identity() * 0.5);
  const GaussianState s = evolve_gaussian(s0, h, kPi / 2);
  const double err = std::max(std::abs(s.mean(0) - 0.0), std::abs(s.mean(1) + 1.0));
  return {err <= 1e-10, "X-quadrature means (" + fmt("%.3g", s.mean(0)) + ", " + fmt("%.12g", s.mean(1)) +
                            "), max error " + fmt("%.2e", err) + " <= 1e-10"};
}

// Mean position error of the grid HO run against the closed-form flow (0, -1).
double harmonic_grid_mean_error(int steps, TrotterOrder order, DensityTable* density) {
  const KvNHamiltonian h = build_kvn(harmonic());
  GridState s = prepare_gaussian(grid(2, 128, 8), vec({1, 0}), Eigen::Matrix2d::Identity() * 0.5);
  run(s, trotter_circuit(h, kPi / 2, steps, order));
  const DensityTable d = born_density(s);
  const Moments m = moments_of(d);
  if (density) *density = d;
  return std::hypot(m.mean[0] - 0.0, m.mean[1] + 1.0);
}

Outcome harmonic_grid() {
  DensityTable d;
  const double mean_err = harmonic_grid_mean_error(200, TrotterOrder::Second, &d);
  const FlowMap map(harmonic(), Integrator::Leapfrog, 1e-3);
  const DensityTable oracle =
      liouville_density_on_grid(map, gaussian_density(vec({1, 0}), Eigen::Matrix2d::Identity() * 0.5), kPi / 2, d.axes);
  const double tv = compare_densities(d, oracle).total_variation;

  // Least-squares slope of log(error) against log(n) for first order.
  const std::vector<int> ns{25, 50, 100, 200};
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::string errs;
  for (int n : ns) {
    const double e = harmonic_grid_mean_error(n, TrotterOrder::First, nullptr);
    const double lx = std::log(n), ly = std::log(e);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    errs += (errs.empty() ? "" : ",") + fmt("%.2e", e);
  }
  const double k = static_cast<double>(ns.size());
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  const bool pass = tv <= 0.05 && mean_err <= 1e-2 && std::abs(slope + 1.0) <= 0.2;
  return {pass, "TV " + fmt("%.2e", tv) + " <= 0.05, mean error " + fmt("%.2e", mean_err) +
                    " <= 1e-2, first-order slope " + fmt("%.3f", slope) + " in [-1.2, -0.8] (errors " + errs + ")"};
}

// Product Gaussian: the target (mode 0) is wide, controls are narrow so that
// the weighted quartic phases stay resolved on 64 points.
Outcome synthesis_equivalence() {
  struct Case {
    const char* factor;
    std::size_t modes;
  };
  const std::vector<Case> cases{{"x2", 2},       {"x2^2", 2},    {"x2*x3", 3},
                                {"x2^3", 2},     {"x2^2*x3", 3}, {"x2*x3*x4", 4}};
  double worst = 0.0;
  std::string names;
  for (const auto& c : cases) {
    const PhasePolynomial factor = PhasePolynomial::parse(c.factor, c.modes);
    const KvNTerm term{0, 1, factor};
    Eigen::VectorXd mean = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(c.modes), 0.1);
    Eigen::VectorXd sd = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(c.modes), 0.22);
    mean(0) = 0.3;
    sd(0) = 1.0;
    const Eigen::MatrixXd cov = sd.array().square().matrix().asDiagonal();
    const GridState s0 = prepare_gaussian(grid(c.modes, 64, 10), mean, cov);
    for (double s : {0.5, -0.35}) {
      GridState synth = s0, exact = s0;
      run(synth, synthesize_term(term, s));
      exact_controlled_shift(exact, term, s);
      worst = std::max(worst, relative_l2_error(synth, exact));
      if (c.modes == 4) break;  // one strength keeps the 64^4 case quick
    }
    names += (names.empty() ? "" : ", ") + std::string("P1 ") + c.factor;
  }
  return {worst <= 1e-6, "6 generators (" + names + "), worst relative L2 error " + fmt("%.2e", worst) + " <= 1e-6"};
}

Outcome quartic_oscillator() {
  const ClassicalHamiltonian h = validate_separation(PhasePolynomial::parse("1/2*x2^2 + 1/2*x1^2 + 1/10*1/4*x1^4", 2), 1);
  const Eigen::VectorXd mean = vec({1, 0.5});
  const Eigen::MatrixXd cov = Eigen::Matrix2d::Identity() * 0.5;
  const double t = 1.0;

  GridState s = prepare_gaussian(grid(2, 128, 8), mean, cov);
  run(s, trotter_circuit(build_kvn(h), t, 100, TrotterOrder::Second));
  const Moments g = moments_of(born_density(s));

  const FlowMap map(h, Integrator::Leapfrog, 1e-3);
  const Moments e = ensemble_evolve(map, sample_gaussian(mean, cov, 100000, 20261018), t).moments();

  const double mean_rel = std::hypot(g.mean[0] - e.mean[0], g.mean[1] - e.mean[1]) / std::hypot(e.mean[0], e.mean[1]);
  double diff = 0, norm = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    diff += (g.covariance[i] - e.covariance[i]) * (g.covariance[i] - e.covariance[i]);
    norm += e.covariance[i] * e.covariance[i];
  }
  const double cov_rel = std::sqrt(diff / norm);
  return {mean_rel <= 0.05 && cov_rel <= 0.05,
          "grid mean (" + fmt("%.4f", g.mean[0]) + ", " + fmt("%.4f", g.mean[1]) + ") vs ensemble (" +
              fmt("%.4f", e.mean[0]) + ", " + fmt("%.4f", e.mean[1]) + "); relative first-moment error " +
              fmt("%.2e", mean_rel) + ", second-moment error " + fmt("%.2e", cov_rel) + " <= 5e-2"};
}

Outcome unitarity_and_fourier() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  const GridSpec spec = grid(3, 32, 6);
  GridState s = prepare_gaussian(spec, vec({0.2, -0.3, 0.1}), Eigen::Matrix3d::Identity() * 0.3);
  const std::vector<Gate> gates{Gate::displacement(0, 0.7), Gate::quadratic_phase(1, -0.4), Gate::cubic_phase(2, 0.3),
                                Gate::quartic_phase(0, 0.2), Gate::rotation(1, 0.9),       Gate::rotation(2, 2.5),
                                Gate::cz(0, 2, 0.6),         Gate::cx(2, 1, -0.8),         Gate::fourier(2),
                                Gate::fourier_inverse(0),    Gate::rotation(0, kPi)};
  double drift = 0.0;
  for (int rep = 0; rep < 3; ++rep)
    for (const auto& g : gates) {
      const double before = s.norm_squared();
      apply_gate(s, g);
      drift = std::max(drift, std::abs(s.norm_squared() - before));
    }

  GridState base = prepare_gaussian(grid(2, 128, 8), vec({0.4, -0.2}), Eigen::Matrix2d::Identity() * 0.4);
  apply_gate(base, Gate::displacement(0, 0.5));
  apply_gate(base, Gate::quadratic_phase(1, 0.3));
  apply_gate(base, Gate::displacement(1, -0.7));
  GridState f4 = base;
  for (int i = 0; i < 4; ++i) apply_gate(f4, Gate::fourier(0));
  const double f4_err = relative_l2_error(f4, base);

  double rel_err = 0.0;
  for (std::size_t m = 0; m < 2; ++m) {
    GridState f = base;
    apply_gate(f, Gate::fourier(m));
    rel_err = std::max(rel_err, std::abs(expect_momentum(f, m) - expect_position(base, m)));
    rel_err = std::max(rel_err, std::abs(expect_position(f, m) + expect_momentum(base, m)));
  }
  return {drift <= 1e-12 && f4_err <= 1e-10 && rel_err <= 1e-8,
          "norm drift per gate " + fmt("%.1e", drift) + " <= 1e-12, F^4 error " + fmt("%.1e", f4_err) +
              " <= 1e-10, Fourier expectation relations " + fmt("%.1e", rel_err) + " <= 1e-8"};
}

Outcome product_rule() {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5), deg(0, 4);
  auto random_poly = [&](std::size_t vars, int max_terms) {
    PhasePolynomial p(vars);
    std::uniform_int_distribution<std::size_t> var(0, vars - 1);
    for (int t = 0; t < max_terms; ++t) {
      Monomial m(vars, 0);
      const int d = deg(rng);
      for (int k = 0; k < d; ++k) ++m[var(rng)];
      p.add_term(m, Rational(num(rng)) / den(rng));
    }
    return p;
  };
  int passed = 0;
  const int total = 50;
  for (int i = 0; i < total; ++i) {
    const std::size_t vars = 2 * (1 + i % 3);
    passed += verify_liouvillian_product_rule(random_poly(vars, 5), random_poly(vars, 4), random_poly(vars, 4));
  }
  return {passed == total, std::to_string(passed) + "/" + std::to_string(total) + " random (H, f, g) triples exact"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "symbolic identity suite", 5, symbolic_identities},
      {2, "expansion identity", 1, expansion_identity},
      {3, "harmonic oscillator, gaussian backend", 1, harmonic_gaussian},
      {4, "harmonic oscillator, grid backend", 120, harmonic_grid},
      {5, "synthesis vs exact controlled shift", 300, synthesis_equivalence},
      {6, "quartic oscillator vs classical ensemble", 300, quartic_oscillator},
      {7, "unitarity and Fourier relations", 30, unitarity_and_fourier},
      {8, "Liouvillian product rule", 5, product_rule},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.time_limit_s;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("[%s] %d %s: %s (%.3f s, limit %g s%s)\n", pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(),
                secs, c.time_limit_s, in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
