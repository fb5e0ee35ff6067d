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
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "cvkvn/grid.hpp"
#include "cvkvn/kvn.hpp"
#include "cvkvn/oracle.hpp"
#include "cvkvn/synth.hpp"

namespace cvkvn::cli {

inline constexpr int kSchemaVersion = 1;

/// Invalid configuration.  `field()` is the dotted JSON path of the offending
/// entry (e.g. `hamiltonian.polynomial`).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

enum class Backend { Grid, Gaussian };
enum class Reference { Liouville, Ensemble };

const char* to_string(Backend b);
Backend backend_from_string(const std::string& s);

struct EvolutionConfig {
  double t = 0.0;
  int n_steps = 1;
  TrotterOrder order = TrotterOrder::Second;
};

struct SamplingConfig {
  std::size_t num_samples = 1000;
  std::uint64_t seed = 1;
};

struct VerifyConfig {
  Reference reference = Reference::Liouville;
  /// Liouville reference thresholds.
  double max_tv = 0.05;
  double max_mean_error = 1e-2;
  /// Ensemble reference: relative error of the mean vector and (Frobenius)
  /// covariance.
  double max_relative_moment_error = 0.05;
  std::size_t ensemble_samples = 100000;
  std::uint64_t ensemble_seed = 1;
  Integrator integrator = Integrator::Leapfrog;
  double dt = 1e-3;
};

struct ExperimentConfig {
  std::size_t n = 1;
  std::string polynomial;
  ClassicalHamiltonian hamiltonian{1, PhasePolynomial(2), PhasePolynomial(2)};
  Eigen::VectorXd mean;
  Eigen::MatrixXd covariance;
  GridSpec grid;
  EvolutionConfig evolution;
  Backend backend = Backend::Grid;
  SamplingConfig sampling;
  VerifyConfig verify;
  std::string output_dir = "out";

  /// Phase-space dimension 2n, which is also the qumode count.
  std::size_t dim() const { return 2 * n; }
  KvNHamiltonian kvn() const { return build_kvn(hamiltonian); }
};

/// Parses and validates a JSON document.  Unknown keys are rejected.  The
/// Hamiltonian must pass validate_separation and the degree bound; the
/// gaussian backend requires every KvN generator to be quadratic.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

/// Re-checks the cross-field constraints after command-line overrides.
void validate(const ExperimentConfig& config);

}  // namespace cvkvn::cli
