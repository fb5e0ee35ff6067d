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

#include "cvkvn/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "cvkvn/error.hpp"
#include "cvkvn/gaussian.hpp"
#include "cvkvn/grid.hpp"
#include "cvkvn/identities.hpp"
#include "cvkvn/oracle.hpp"
#include "cvkvn/synth.hpp"

namespace cvkvn::cli {

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

void require_finite(const EvolutionResult& r) {
  for (std::size_t i = 0; i < r.density.values.size(); ++i)
    if (!std::isfinite(r.density.values[i])) throw NumericalBlowUp("non-finite density value", i);
  for (std::size_t i = 0; i < r.moments.mean.size(); ++i)
    if (!std::isfinite(r.moments.mean[i])) throw NumericalBlowUp("non-finite mean", i);
}

std::vector<std::vector<double>> sample_continuous(const GaussianState& g, std::size_t count, std::uint64_t seed) {
  const Eigen::VectorXd mean = g.position_mean();
  const Eigen::MatrixXd cov = g.position_covariance();
  return sample_gaussian(mean, cov, count, seed).samples;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

EvolutionResult evolve(const ExperimentConfig& c) {
  EvolutionResult r;
  const KvNHamiltonian kvn = c.kvn();
  if (c.backend == Backend::Gaussian) {
    GaussianState g = GaussianState::from_position_density(c.mean, c.covariance);
    g = evolve_gaussian(g, kvn, c.evolution.t);
    if (!g.mean.allFinite() || !g.covariance.allFinite()) throw NumericalBlowUp("gaussian moments left the finite range", 0);
    r.density = position_density(g, c.grid);
    const Eigen::VectorXd m = g.position_mean();
    const Eigen::MatrixXd s = g.position_covariance();
    r.moments.mean.assign(m.data(), m.data() + m.size());
    for (Eigen::Index i = 0; i < s.rows(); ++i)
      for (Eigen::Index j = 0; j < s.cols(); ++j) r.moments.covariance.push_back(s(i, j));
    r.samples = sample_continuous(g, c.sampling.num_samples, c.sampling.seed);
  } else {
    GridState s = prepare_gaussian(c.grid, c.mean, c.covariance);
    run(s, trotter_circuit(kvn, c.evolution.t, c.evolution.n_steps, c.evolution.order));
    for (std::size_t i = 0; i < s.amplitudes().size(); ++i)
      if (!std::isfinite(s.amplitudes()[i].real()) || !std::isfinite(s.amplitudes()[i].imag()))
        throw NumericalBlowUp("non-finite amplitude", i);
    r.density = born_density(s);
    r.moments = moments_of(r.density);
    r.samples = measure_positions(s, c.sampling.num_samples, c.sampling.seed);
    r.boundary_mass = boundary_mass(s);
  }
  require_finite(r);
  return r;
}

void write_outputs(const EvolutionResult& r, const std::string& dir) {
  const std::filesystem::path root(dir);
  std::filesystem::create_directories(root);
  write_file(root / "density.csv", density_csv(r.density));
  write_file(root / "moments.csv", moments_csv(r.moments));
  write_file(root / "samples.csv", samples_csv(r.samples));
}

int run_identities(std::ostream& out) {
  bool ok = true;
  for (const ExponentTriple& t : admissible_triples()) {
    const KeyDecompositionReport rep = verify_key_decomposition(t[0], t[1], t[2]);
    out << rep.line() << '\n';
    ok = ok && rep.passed();
  }
  const std::vector<std::string> hs{"1/2 * x2^2 + 1/2 * x1^2", "1/2 * x2^2 + 1/2 * x1^2 + 1/40 * x1^4",
                                    "1/2 * x3^2 + 1/2 * x4^2 + x1^2 * x2^2"};
  const std::vector<std::pair<std::string, std::string>> fg{
      {"x1", "x2"}, {"x1^2 + x2", "3 - x1 * x2"}, {"x1 * x3 + 1/2", "x2^2 * x4 - x3"}};
  int passed = 0;
  int total = 0;
  for (const std::string& h : hs)
    for (const auto& [f, g] : fg) {
      ++total;
      if (verify_liouvillian_product_rule(PhasePolynomial::parse(h, 4), PhasePolynomial::parse(f, 4),
                                          PhasePolynomial::parse(g, 4)))
        ++passed;
    }
  out << "product rule " << passed << "/" << total << (passed == total ? " PASS" : " FAIL") << '\n';
  ok = ok && passed == total;
  return ok ? kOk : kThresholdBreach;
}

int run_synth(const ExperimentConfig& c, bool dump_kvn, std::ostream& out) {
  const KvNHamiltonian kvn = c.kvn();
  if (dump_kvn) out << "# kvn hamiltonian\n" << kvn.listing();
  const double step = c.evolution.t / c.evolution.n_steps;
  const GateSequence one = trotter_circuit(kvn, step, 1, c.evolution.order);
  const GateSequence full = trotter_circuit(kvn, c.evolution.t, c.evolution.n_steps, c.evolution.order);
  out << "# one step (" << one.size() << " gates)\n" << one.to_text();
  out << "# circuit (" << full.size() << " gates, " << c.evolution.n_steps << " steps, order "
      << static_cast<int>(c.evolution.order) << ")\n"
      << full.to_text();
  return kOk;
}

int run_evolve(const ExperimentConfig& c, std::ostream& out, std::ostream& err) {
  if (c.backend == Backend::Grid) {
    const double cover = coverage_sigmas(c.grid, c.mean, c.covariance);
    if (cover < 5.0)
      err << "warning: grid covers the initial density to only " << fmt("%.2f", cover)
          << " standard deviations; consider a larger half_extent\n";
  }
  const EvolutionResult r = evolve(c);
  write_outputs(r, c.output_dir);
  out << "backend " << to_string(c.backend) << ", t = " << format_double(c.evolution.t) << '\n';
  out << "mean";
  for (double m : r.moments.mean) out << ' ' << format_double(m);
  out << '\n';
  if (c.backend == Backend::Grid) {
    out << "boundary mass " << fmt("%.3e", r.boundary_mass) << '\n';
    if (r.boundary_mass > 1e-6)
      err << "warning: " << fmt("%.2e", r.boundary_mass)
          << " of the probability sits near the grid edge; results may be aliased\n";
  }
  out << "wrote density.csv, moments.csv, samples.csv to " << c.output_dir << '\n';
  return kOk;
}

int run_verify(const ExperimentConfig& c, bool self_compare, std::ostream& out, std::ostream& err) {
  const EvolutionResult r = evolve(c);
  if (self_compare) {
    const EvolutionResult again = evolve(c);
    const DensityComparison d = compare_densities(r.density, again.density);
    const bool ok = d.total_variation == 0.0 && r.samples == again.samples;
    out << "self-compare: total variation " << fmt("%.3e", d.total_variation)
        << (r.samples == again.samples ? ", samples identical" : ", samples differ") << (ok ? " PASS" : " FAIL")
        << '\n';
    return ok ? kOk : kThresholdBreach;
  }

  const FlowMap map(c.hamiltonian, c.verify.integrator, c.verify.dt);
  if (c.verify.reference == Reference::Liouville) {
    const DensityTable ref =
        liouville_density_on_grid(map, gaussian_density(c.mean, c.covariance), c.evolution.t, r.density.axes);
    const DensityComparison d = compare_densities(r.density, ref);
    const bool ok = d.total_variation <= c.verify.max_tv && d.mean_error_norm <= c.verify.max_mean_error;
    out << "liouville reference: total variation " << fmt("%.3e", d.total_variation) << " (max "
        << format_double(c.verify.max_tv) << "), mean error " << fmt("%.3e", d.mean_error_norm) << " (max "
        << format_double(c.verify.max_mean_error) << "), covariance error " << fmt("%.3e", d.covariance_error)
        << (ok ? " PASS" : " FAIL") << '\n';
    if (!ok) err << "verification failed: threshold exceeded\n";
    return ok ? kOk : kThresholdBreach;
  }

  const Moments e =
      ensemble_evolve(map, sample_gaussian(c.mean, c.covariance, c.verify.ensemble_samples, c.verify.ensemble_seed),
                      c.evolution.t)
          .moments();
  std::vector<double> dm(e.mean.size());
  std::vector<double> dc(e.covariance.size());
  double trace = 0.0;
  for (std::size_t i = 0; i < dm.size(); ++i) {
    dm[i] = r.moments.mean[i] - e.mean[i];
    trace += e.covariance[i * dm.size() + i];
  }
  for (std::size_t i = 0; i < dc.size(); ++i) dc[i] = r.moments.covariance[i] - e.covariance[i];
  const double mean_rel = norm(dm) / std::max(norm(e.mean), std::sqrt(trace));
  const double cov_rel = norm(dc) / norm(e.covariance);
  const bool ok = mean_rel <= c.verify.max_relative_moment_error && cov_rel <= c.verify.max_relative_moment_error;
  out << "ensemble reference (" << c.verify.ensemble_samples << " samples): relative mean error "
      << fmt("%.3e", mean_rel) << ", relative covariance error " << fmt("%.3e", cov_rel) << " (max "
      << format_double(c.verify.max_relative_moment_error) << ")" << (ok ? " PASS" : " FAIL") << '\n';
  if (!ok) err << "verification failed: threshold exceeded\n";
  return ok ? kOk : kThresholdBreach;
}

}  // namespace cvkvn::cli
