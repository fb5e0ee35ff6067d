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

#include <ostream>
#include <string>

#include "cvkvn/cli/config.hpp"
#include "cvkvn/density.hpp"

namespace cvkvn::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kThresholdBreach = 3,
  kBlowUp = 4,
};

/// Position density, moments and position samples after evolving the
/// configured initial density for time t.
struct EvolutionResult {
  DensityTable density;
  Moments moments;
  std::vector<std::vector<double>> samples;
  /// Probability in the outer 5% of each axis (grid backend only).
  double boundary_mass = 0.0;
};

/// Throws NumericalBlowUp on non-finite amplitudes or moments.
EvolutionResult evolve(const ExperimentConfig& config);

/// Writes density.csv, moments.csv and samples.csv into `dir`.
void write_outputs(const EvolutionResult& result, const std::string& dir);

/// Key-decomposition report for every admissible exponent triple plus a
/// Liouvillian product-rule battery.  Returns kOk or kThresholdBreach.
int run_identities(std::ostream& out);

/// Prints the KvN listing (when `dump_kvn`), the one-step sequence and the
/// full Trotter circuit.
int run_synth(const ExperimentConfig& config, bool dump_kvn, std::ostream& out);

int run_evolve(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

/// Compares the backend against the configured classical reference.  With
/// `self_compare` the backend is compared against a second run of itself.
int run_verify(const ExperimentConfig& config, bool self_compare, std::ostream& out, std::ostream& err);

}  // namespace cvkvn::cli
