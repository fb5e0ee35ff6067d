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

#include "cvkvn/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cvkvn/error.hpp"

namespace cvkvn::cli {

namespace {

using nlohmann::json;

class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_, "expected an object");
  }

  std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  bool has(const std::string& key) const {
    seen_.insert(key);
    return j_.contains(key);
  }

  const json& at(const std::string& key) const {
    if (!has(key)) throw ConfigError(field(key), "missing required field");
    return j_.at(key);
  }

  Reader object(const std::string& key) const { return Reader(at(key), field(key)); }

  double number(const std::string& key) const {
    const json& v = at(key);
    if (!v.is_number()) throw ConfigError(field(key), "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ConfigError(field(key), "must be finite");
    return d;
  }

  double number_or(const std::string& key, double fallback) const { return has(key) ? number(key) : fallback; }

  std::uint64_t unsigned_int(const std::string& key) const {
    const json& v = at(key);
    if (!v.is_number_unsigned())
      throw ConfigError(field(key), "expected a non-negative integer");
    return v.get<std::uint64_t>();
  }

  std::uint64_t unsigned_or(const std::string& key, std::uint64_t fallback) const {
    return has(key) ? unsigned_int(key) : fallback;
  }

  std::string string(const std::string& key) const {
    const json& v = at(key);
    if (!v.is_string()) throw ConfigError(field(key), "expected a string");
    return v.get<std::string>();
  }

  std::string string_or(const std::string& key, const std::string& fallback) const {
    return has(key) ? string(key) : fallback;
  }

  /// Throws on keys that were never looked up.
  void finish() const {
    for (const auto& [k, v] : j_.items())
      if (!seen_.count(k)) throw ConfigError(field(k), "unknown field");
  }

 private:
  const json& j_;
  std::string path_;
  mutable std::set<std::string> seen_;
};

Eigen::VectorXd read_vector(const json& v, const std::string& field) {
  if (!v.is_array()) throw ConfigError(field, "expected an array of numbers");
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) throw ConfigError(field, "entry " + std::to_string(i) + " is not a number");
    out(static_cast<Eigen::Index>(i)) = v[i].get<double>();
  }
  return out;
}

Eigen::MatrixXd read_matrix(const json& v, const std::string& field) {
  if (!v.is_array() || v.empty()) throw ConfigError(field, "expected a non-empty array of rows");
  const std::size_t rows = v.size();
  Eigen::MatrixXd out(rows, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const Eigen::VectorXd row = read_vector(v[i], field + "[" + std::to_string(i) + "]");
    if (static_cast<std::size_t>(row.size()) != rows) throw ConfigError(field, "matrix must be square");
    out.row(static_cast<Eigen::Index>(i)) = row;
  }
  return out;
}

std::string assumption_note(const AssumptionViolation& e) {
  return std::string(e.what()) + " (violates: " + e.assumption() + ")";
}

}  // namespace

const char* to_string(Backend b) { return b == Backend::Grid ? "grid" : "gaussian"; }

Backend backend_from_string(const std::string& s) {
  if (s == "grid") return Backend::Grid;
  if (s == "gaussian") return Backend::Gaussian;
  throw ConfigError("backend", "expected \"grid\" or \"gaussian\", got \"" + s + "\"");
}

void validate(const ExperimentConfig& c) {
  const auto d = static_cast<Eigen::Index>(c.dim());
  if (c.mean.size() != d)
    throw ConfigError("initial_density.mean", "needs " + std::to_string(d) + " entries (2n phase-space coordinates)");
  if (c.covariance.rows() != d)
    throw ConfigError("initial_density.covariance", "needs a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
  if (!c.covariance.isApprox(c.covariance.transpose(), 1e-12))
    throw ConfigError("initial_density.covariance", "must be symmetric");
  Eigen::LLT<Eigen::MatrixXd> llt(c.covariance);
  if (llt.info() != Eigen::Success) throw ConfigError("initial_density.covariance", "must be positive definite");
  if (c.grid.num_modes != c.dim()) throw ConfigError("grid", "qumode count must equal 2n");
  try {
    c.grid.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("grid", e.what());
  }
  if (c.evolution.n_steps < 1) throw ConfigError("evolution.n_steps", "must be at least 1");
  if (c.sampling.num_samples < 1) throw ConfigError("sampling.num_samples", "must be at least 1");
  if (c.backend == Backend::Gaussian && !c.kvn().is_quadratic())
    throw ConfigError("backend", "the gaussian backend needs a quadratic Hamiltonian (every KvN generator of degree <= 2); "
                                 "use the grid backend");
  if (!(c.verify.dt > 0.0)) throw ConfigError("verify.dt", "must be positive");
  if (c.verify.ensemble_samples < 1) throw ConfigError("verify.ensemble_samples", "must be at least 1");
}

ExperimentConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError("", std::string("not valid JSON: ") + e.what());
  }
  const Reader root(doc, "");
  ExperimentConfig c;

  const std::uint64_t version = root.unsigned_int("schema_version");
  if (version != kSchemaVersion)
    throw ConfigError("schema_version", "unsupported version " + std::to_string(version) + ", expected " +
                                            std::to_string(kSchemaVersion));

  {
    const Reader h = root.object("hamiltonian");
    c.n = h.unsigned_int("n");
    if (c.n < 1 || c.n > 2) throw ConfigError("hamiltonian.n", "must be 1 or 2 (the grid holds at most 4 qumodes)");
    c.polynomial = h.string("polynomial");
    try {
      c.hamiltonian = validate_separation(PhasePolynomial::parse(c.polynomial, 2 * c.n), c.n);
    } catch (const AssumptionViolation& e) {
      throw ConfigError("hamiltonian.polynomial", assumption_note(e));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("hamiltonian.polynomial", e.what());
    }
    h.finish();
  }
  {
    const Reader d = root.object("initial_density");
    c.mean = read_vector(d.at("mean"), "initial_density.mean");
    c.covariance = read_matrix(d.at("covariance"), "initial_density.covariance");
    d.finish();
  }
  c.grid.num_modes = c.dim();
  if (root.has("grid")) {
    const Reader g = root.object("grid");
    c.grid.points_per_mode = g.unsigned_or("points_per_mode", c.grid.points_per_mode);
    c.grid.half_extent = g.number_or("half_extent", c.grid.half_extent);
    c.grid.memory_cap_bytes = g.unsigned_or("memory_cap_bytes", c.grid.memory_cap_bytes);
    g.finish();
  }
  {
    const Reader e = root.object("evolution");
    c.evolution.t = e.number("t");
    const std::uint64_t steps = e.unsigned_or("n_steps", 1);
    if (steps < 1 || steps > 1000000) throw ConfigError("evolution.n_steps", "must be between 1 and 1000000");
    c.evolution.n_steps = static_cast<int>(steps);
    const std::uint64_t order = e.unsigned_or("order", 2);
    if (order != 1 && order != 2) throw ConfigError("evolution.order", "must be 1 or 2");
    c.evolution.order = order == 1 ? TrotterOrder::First : TrotterOrder::Second;
    e.finish();
  }
  c.backend = backend_from_string(root.string_or("backend", "grid"));
  if (root.has("sampling")) {
    const Reader s = root.object("sampling");
    c.sampling.num_samples = s.unsigned_or("num_samples", c.sampling.num_samples);
    c.sampling.seed = s.unsigned_or("seed", c.sampling.seed);
    s.finish();
  }
  if (root.has("verify")) {
    const Reader v = root.object("verify");
    const std::string ref = v.string_or("reference", "liouville");
    if (ref == "liouville")
      c.verify.reference = Reference::Liouville;
    else if (ref == "ensemble")
      c.verify.reference = Reference::Ensemble;
    else
      throw ConfigError("verify.reference", "expected \"liouville\" or \"ensemble\"");
    c.verify.max_tv = v.number_or("max_tv", c.verify.max_tv);
    c.verify.max_mean_error = v.number_or("max_mean_error", c.verify.max_mean_error);
    c.verify.max_relative_moment_error = v.number_or("max_relative_moment_error", c.verify.max_relative_moment_error);
    c.verify.ensemble_samples = v.unsigned_or("ensemble_samples", c.verify.ensemble_samples);
    c.verify.ensemble_seed = v.unsigned_or("ensemble_seed", c.verify.ensemble_seed);
    const std::string integ = v.string_or("integrator", "leapfrog");
    if (integ == "leapfrog")
      c.verify.integrator = Integrator::Leapfrog;
    else if (integ == "rk4")
      c.verify.integrator = Integrator::Rk4;
    else
      throw ConfigError("verify.integrator", "expected \"leapfrog\" or \"rk4\"");
    c.verify.dt = v.number_or("dt", c.verify.dt);
    v.finish();
  }
  if (root.has("outputs")) {
    const Reader o = root.object("outputs");
    c.output_dir = o.string_or("dir", c.output_dir);
    o.finish();
  }
  root.finish();
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace cvkvn::cli
