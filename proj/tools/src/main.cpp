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

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cvkvn/cli/commands.hpp"
#include "cvkvn/cli/config.hpp"
#include "cvkvn/error.hpp"

namespace {

using namespace cvkvn::cli;

struct Options {
  std::string config_path;
  std::string out_dir;
  std::string backend;
  bool dump_kvn = false;
  bool self_compare = false;
};

ExperimentConfig load(const Options& o) {
  ExperimentConfig c = load_config(o.config_path);
  if (!o.out_dir.empty()) c.output_dir = o.out_dir;
  if (!o.backend.empty()) c.backend = backend_from_string(o.backend);
  validate(c);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Koopman-von Neumann simulation of classical dynamics on continuous-variable circuits", "cvkvn"};
  app.require_subcommand(1);
  Options o;

  auto* identities = app.add_subcommand("identities", "verify the gate-decomposition identities symbolically");

  auto add_config = [&](CLI::App* cmd) {
    cmd->add_option("-c,--config", o.config_path, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
    cmd->add_option("--backend", o.backend, "override the config backend")
        ->check(CLI::IsMember({"grid", "gaussian"}));
  };
  auto* synth = app.add_subcommand("synth", "print the KvN Hamiltonian and the compiled circuit");
  add_config(synth);
  synth->add_flag("--dump-kvn", o.dump_kvn, "print the KvN Hamiltonian terms");

  auto* evolve = app.add_subcommand("evolve", "evolve the initial density and write CSV outputs");
  add_config(evolve);
  evolve->add_option("-o,--out", o.out_dir, "output directory (overrides outputs.dir)");

  auto* verify = app.add_subcommand("verify", "compare the simulated density against a classical reference");
  add_config(verify);
  verify->add_flag("--self-compare", o.self_compare, "compare two runs of the backend instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (identities->parsed()) return run_identities(std::cout);
    const ExperimentConfig c = load(o);
    if (synth->parsed()) return run_synth(c, o.dump_kvn, std::cout);
    if (evolve->parsed()) return run_evolve(c, std::cout, std::cerr);
    return run_verify(c, o.self_compare, std::cout, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const cvkvn::NumericalBlowUp& e) {
    std::cerr << "numerical blow-up at index " << e.index() << ": " << e.what() << '\n';
    return kBlowUp;
  } catch (const cvkvn::AssumptionViolation& e) {
    std::cerr << "config error: " << e.what() << " (violates: " << e.assumption() << ")\n";
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
