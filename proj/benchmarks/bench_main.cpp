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

#include <benchmark/benchmark.h>

#include <Eigen/Dense>

#include "cvkvn/gaussian.hpp"
#include "cvkvn/grid.hpp"
#include "cvkvn/identities.hpp"
#include "cvkvn/kvn.hpp"
#include "cvkvn/oracle.hpp"
#include "cvkvn/synth.hpp"
#include "cvkvn/weyl.hpp"

namespace {

using namespace cvkvn;

ClassicalHamiltonian quartic() {
  return validate_separation(PhasePolynomial::parse("1/2 * x2^2 + 1/2 * x1^2 + 1/40 * x1^4", 2), 1);
}

GridSpec grid(std::size_t modes, std::size_t points, double half_extent) {
  GridSpec g;
  g.num_modes = modes;
  g.points_per_mode = points;
  g.half_extent = half_extent;
  return g;
}

void BM_WeylCommutator(benchmark::State& state) {
  const WeylPolynomial a = build_kvn(quartic()).to_weyl();
  const WeylPolynomial b = a * a;
  for (auto _ : state) benchmark::DoNotOptimize(commutator(a, b));
}
BENCHMARK(BM_WeylCommutator);

void BM_KeyDecomposition(benchmark::State& state) {
  const int a2 = static_cast<int>(state.range(0));
  const int a3 = static_cast<int>(state.range(1));
  const int a4 = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(verify_key_decomposition(a2, a3, a4));
}
BENCHMARK(BM_KeyDecomposition)->Args({1, 0, 0})->Args({1, 1, 0})->Args({1, 1, 1})->Args({3, 0, 0})->Unit(benchmark::kMicrosecond);

void BM_TrotterCircuit(benchmark::State& state) {
  const KvNHamiltonian h = build_kvn(quartic());
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trotter_circuit(h, 1.0, steps, TrotterOrder::Second));
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_TrotterCircuit)->Arg(10)->Arg(100)->Arg(1000);

void BM_GridGate(benchmark::State& state, Gate gate) {
  const std::size_t points = static_cast<std::size_t>(state.range(0));
  GridState s = prepare_gaussian(grid(2, points, 8.0), Eigen::Vector2d(0.5, 0.0), Eigen::Matrix2d::Identity() * 0.5);
  for (auto _ : state) apply_gate(s, gate);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(points * points));
}
BENCHMARK_CAPTURE(BM_GridGate, controlled_x, Gate::cx(0, 1, 0.01))->Arg(64)->Arg(128)->Arg(256);
BENCHMARK_CAPTURE(BM_GridGate, quartic_phase, Gate::quartic_phase(1, 1e-4))->Arg(64)->Arg(128)->Arg(256);
BENCHMARK_CAPTURE(BM_GridGate, fourier, Gate::fourier(1))->Arg(64)->Arg(128)->Arg(256);
BENCHMARK_CAPTURE(BM_GridGate, rotation, Gate::rotation(0, 0.3))->Arg(64)->Arg(128)->Arg(256);

void BM_GridQuarticEvolution(benchmark::State& state) {
  const GateSequence circuit = trotter_circuit(build_kvn(quartic()), 1.0, 100, TrotterOrder::Second);
  const GridSpec spec = grid(2, 128, 8.0);
  const GridState initial = prepare_gaussian(spec, Eigen::Vector2d(1.0, 0.5), Eigen::Matrix2d::Identity() * 0.5);
  for (auto _ : state) {
    GridState s = initial;
    run(s, circuit);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
}
BENCHMARK(BM_GridQuarticEvolution)->Unit(benchmark::kMillisecond);

void BM_GaussianEvolution(benchmark::State& state) {
  const KvNHamiltonian h = build_kvn(validate_separation(PhasePolynomial::parse("1/2 * x2^2 + 1/2 * x1^2", 2), 1));
  const GaussianState g = GaussianState::from_position_density(Eigen::Vector2d(1.0, 0.0), Eigen::Matrix2d::Identity());
  for (auto _ : state) benchmark::DoNotOptimize(evolve_gaussian(g, h, 1.5));
}
BENCHMARK(BM_GaussianEvolution);

void BM_EnsembleLeapfrog(benchmark::State& state) {
  const FlowMap map(quartic(), Integrator::Leapfrog, 1e-3);
  const ClassicalEnsemble e =
      sample_gaussian(Eigen::Vector2d(1.0, 0.5), Eigen::Matrix2d::Identity() * 0.5, 1000, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ensemble_evolve(map, e, 1.0));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_EnsembleLeapfrog)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
