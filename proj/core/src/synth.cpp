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

#include "cvkvn/synth.hpp"

#include <cmath>
#include <stdexcept>

#include "cvkvn/error.hpp"

namespace cvkvn {

std::vector<ExponentTriple> admissible_triples() {
  std::vector<ExponentTriple> out;
  for (int total = 1; total <= 3; ++total)
    for (int a2 = total; a2 >= 0; --a2)
      for (int a3 = total - a2; a3 >= 0; --a3) out.push_back({a2, a3, total - a2 - a3});
  return out;
}

std::vector<ExponentTriple> canonical_triples() {
  std::vector<ExponentTriple> out;
  for (const auto& t : admissible_triples())
    if (t[0] >= t[1] && t[1] >= t[2]) out.push_back(t);
  return out;
}

std::vector<ExpansionTerm> expansion_coefficients(int a2, int a3, int a4) {
  if (a2 < 0 || a3 < 0 || a4 < 0) throw std::invalid_argument("expansion exponents must be nonnegative");
  const int a = 1 + a2 + a3 + a4;
  if (a < 2 || a > 4)
    throw AssumptionViolation("quartic degree bound on V and T",
                              "generator degree " + std::to_string(a) + " outside {2, 3, 4}");
  const Rational prefactor = Rational(1) / (Rational(1 << (a - 1)) * factorial(a));
  std::vector<ExpansionTerm> out;
  for (int v2 = 0; v2 <= a2; ++v2)
    for (int v3 = 0; v3 <= a3; ++v3)
      for (int v4 = 0; v4 <= a4; ++v4) {
        Rational c = prefactor * binomial(a2, v2) * binomial(a3, v3) * binomial(a4, v4);
        if ((v2 + v3 + v4) % 2 != 0) c = -c;
        out.push_back({c, {1, a2 - 2 * v2, a3 - 2 * v3, a4 - 2 * v4}, {v2, v3, v4}});
      }
  return out;
}

namespace {

struct ControlledFactor {
  Rational coefficient;
  std::vector<std::pair<std::size_t, int>> controls;  // (mode, exponent), ascending mode
};

ControlledFactor split_factor(const KvNTerm& term) {
  const PhasePolynomial& f = term.factor;
  if (term.mode >= f.num_vars()) throw std::out_of_range("term mode out of range");
  if (f.num_terms() != 1)
    throw std::invalid_argument("synthesis needs a single-monomial factor, got " + f.to_string());
  if (f.degree() > 3)
    throw AssumptionViolation("quartic degree bound on V and T",
                              "generator degree " + std::to_string(f.degree() + 1) + " exceeds 4");
  if (f.depends_on(term.mode))
    throw std::invalid_argument("factor " + f.to_string() + " involves X of its own target mode " +
                                std::to_string(term.mode));
  const auto& [m, c] = *f.terms().begin();
  ControlledFactor out{c * term.sign, {}};
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) out.controls.emplace_back(i, m[i]);
  return out;
}

}  // namespace

GateSequence synthesize_term(const KvNTerm& term, double s) {
  const std::size_t num_modes = term.factor.num_vars();
  const ControlledFactor cf = split_factor(term);
  GateSequence seq(num_modes);
  if (!std::isfinite(s)) throw std::invalid_argument("synthesis strength must be finite");
  if (s == 0.0) return seq;
  const double strength = s * to_double(cf.coefficient);
  const std::size_t target = term.mode;

  if (cf.controls.empty()) {
    seq.push_back(Gate::fourier(target));
    seq.push_back(Gate::displacement(target, strength));
    seq.push_back(Gate::fourier_inverse(target));
    return seq;
  }
  if (cf.controls.size() == 1 && cf.controls[0].second == 1) {
    seq.push_back(Gate::cx(cf.controls[0].first, target, strength));
    return seq;
  }

  std::array<int, 3> exps{0, 0, 0};
  for (std::size_t i = 0; i < cf.controls.size(); ++i) exps[i] = cf.controls[i].second;
  const int a = 1 + exps[0] + exps[1] + exps[2];

  seq.push_back(Gate::fourier(target));
  for (const auto& et : expansion_coefficients(exps[0], exps[1], exps[2])) {
    for (std::size_t i = cf.controls.size(); i-- > 0;)
      if (et.weights[i + 1] != 0) seq.push_back(Gate::cx(cf.controls[i].first, target, et.weights[i + 1]));
    const double theta = strength * to_double(et.coefficient);
    switch (a) {
      case 2: seq.push_back(Gate::quadratic_phase(target, 2.0 * theta)); break;
      case 3: seq.push_back(Gate::cubic_phase(target, 3.0 * theta)); break;
      default: seq.push_back(Gate::quartic_phase(target, theta)); break;
    }
    for (std::size_t i = 0; i < cf.controls.size(); ++i)
      if (et.weights[i + 1] != 0) seq.push_back(Gate::cx(cf.controls[i].first, target, -et.weights[i + 1]));
  }
  seq.push_back(Gate::fourier_inverse(target));
  return seq;
}

std::size_t synthesis_gate_bound(const KvNTerm& term) {
  const ControlledFactor cf = split_factor(term);
  if (cf.controls.empty()) return 3;
  if (cf.controls.size() == 1 && cf.controls[0].second == 1) return 1;
  std::array<int, 3> exps{0, 0, 0};
  for (std::size_t i = 0; i < cf.controls.size(); ++i) exps[i] = cf.controls[i].second;
  return 2 + 7 * expansion_coefficients(exps[0], exps[1], exps[2]).size();
}

GateSequence cx_via_cz(std::size_t j, std::size_t k, double s, std::size_t num_modes) {
  if (j == k) throw std::invalid_argument("cx_via_cz needs distinct modes");
  GateSequence seq(num_modes);
  seq.push_back(Gate::fourier(k));
  seq.push_back(Gate::cz(j, k, s));
  seq.push_back(Gate::fourier_inverse(k));
  return seq;
}

GateSequence trotter_circuit(const KvNHamiltonian& h, double t, int n_steps, TrotterOrder order) {
  if (!std::isfinite(t)) throw std::invalid_argument("evolution time must be finite");
  if (n_steps < 1) throw std::invalid_argument("n_steps must be at least 1");
  GateSequence circuit(h.num_modes());
  if (t == 0.0) return circuit;
  const double dt = t / n_steps;
  GateSequence step(h.num_modes());
  if (order == TrotterOrder::First) {
    for (const auto& term : h.terms) step.append(synthesize_term(term, dt));
  } else {
    for (const auto& term : h.terms) step.append(synthesize_term(term, dt / 2));
    for (auto it = h.terms.rbegin(); it != h.terms.rend(); ++it) step.append(synthesize_term(*it, dt / 2));
  }
  for (int i = 0; i < n_steps; ++i) circuit.append(step);
  return circuit;
}

}  // namespace cvkvn
