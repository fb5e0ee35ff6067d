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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "cvkvn/circuit.hpp"
#include "cvkvn/error.hpp"
#include "cvkvn/kvn.hpp"
#include "cvkvn/synth.hpp"
#include "test_util.hpp"

namespace cvkvn {
namespace {

PhasePolynomial P(const char* text, std::size_t n) { return PhasePolynomial::parse(text, n); }

// C(v) recomputed from Pascal's triangle and integer arithmetic.
Rational reference_coefficient(const ExponentTriple& a, const std::array<int, 3>& v) {
  const auto pascal = testing_util::pascal_triangle(4);
  const int deg = 1 + a[0] + a[1] + a[2];
  std::int64_t fact = 1;
  for (int k = 2; k <= deg; ++k) fact *= k;
  std::int64_t num = 1;
  for (int i = 0; i < 3; ++i) num *= pascal[a[i]][v[i]];
  const int sign = (v[0] + v[1] + v[2]) % 2 ? -1 : 1;
  return Rational(sign * num) / Rational((std::int64_t{1} << (deg - 1)) * fact);
}

TEST(Triples, AdmissibleAndCanonical) {
  const auto all = admissible_triples();
  EXPECT_EQ(all.size(), 19u);
  std::set<ExponentTriple> seen(all.begin(), all.end());
  EXPECT_EQ(seen.size(), all.size());
  for (const auto& t : all) {
    const int a = 1 + t[0] + t[1] + t[2];
    EXPECT_GE(a, 2);
    EXPECT_LE(a, 4);
  }
  const std::vector<ExponentTriple> canonical{{1, 0, 0}, {2, 0, 0}, {1, 1, 0}, {3, 0, 0}, {2, 1, 0}, {1, 1, 1}};
  auto got = canonical_triples();
  std::sort(got.begin(), got.end());
  auto want = canonical;
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
}

TEST(ExpansionCoefficients, Examples) {
  const auto e100 = expansion_coefficients(1, 0, 0);
  ASSERT_EQ(e100.size(), 2u);
  EXPECT_EQ(e100[0].coefficient, Rational(1) / 4);
  EXPECT_EQ(e100[0].weights, (std::array<int, 4>{1, 1, 0, 0}));
  EXPECT_EQ(e100[1].coefficient, Rational(-1) / 4);
  EXPECT_EQ(e100[1].weights, (std::array<int, 4>{1, -1, 0, 0}));

  const auto e200 = expansion_coefficients(2, 0, 0);
  ASSERT_EQ(e200.size(), 3u);
  EXPECT_EQ(e200[0].coefficient, Rational(1) / 24);
  EXPECT_EQ(e200[0].weights[1], 2);
  EXPECT_EQ(e200[1].coefficient, Rational(-1) / 12);
  EXPECT_EQ(e200[1].weights[1], 0);
  EXPECT_EQ(e200[2].coefficient, Rational(1) / 24);
  EXPECT_EQ(e200[2].weights[1], -2);

  const auto e110 = expansion_coefficients(1, 1, 0);
  ASSERT_EQ(e110.size(), 4u);
  for (const auto& t : e110) EXPECT_EQ(abs(t.coefficient), Rational(1) / 24);

  EXPECT_THROW(expansion_coefficients(0, 0, 0), AssumptionViolation);
  EXPECT_THROW(expansion_coefficients(2, 2, 0), AssumptionViolation);
  EXPECT_THROW(expansion_coefficients(-1, 2, 0), std::invalid_argument);
}

TEST(ExpansionCoefficients, ReproduceTheMonomial) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (const auto& a : admissible_triples()) {
    const auto terms = expansion_coefficients(a[0], a[1], a[2]);
    const int deg = 1 + a[0] + a[1] + a[2];
    std::size_t expected_count = 1;
    for (int e : a) expected_count *= static_cast<std::size_t>(e + 1);
    EXPECT_EQ(terms.size(), expected_count);

    PhasePolynomial sum(4);
    for (const auto& t : terms) {
      EXPECT_EQ(t.coefficient, reference_coefficient(a, t.v));
      EXPECT_EQ(t.weights[0], 1);
      for (int i = 0; i < 3; ++i) EXPECT_EQ(t.weights[i + 1], a[i] - 2 * t.v[i]);
      PhasePolynomial lin(4);
      for (std::size_t i = 0; i < 4; ++i) lin.add_term(Monomial{i == 0, i == 1, i == 2, i == 3}, Rational(t.weights[i]));
      sum += lin.pow(deg) * t.coefficient;
    }
    EXPECT_EQ(sum, PhasePolynomial::monomial(4, {1, a[0], a[1], a[2]}));

    // Floating-point spot check at random points.
    for (int k = 0; k < 20; ++k) {
      double x[4];
      for (double& v : x) v = unif(rng);
      double got = 0.0;
      for (const auto& t : terms) {
        double lin = 0.0;
        for (int i = 0; i < 4; ++i) lin += t.weights[i] * x[i];
        got += to_double(t.coefficient) * std::pow(lin, deg);
      }
      EXPECT_NEAR(got, x[0] * std::pow(x[1], a[0]) * std::pow(x[2], a[1]) * std::pow(x[3], a[2]), 1e-13);
    }
  }
}

TEST(SynthesizeTerm, HarmonicTermIsOneCx) {
  const KvNTerm t{0, +1, P("x2", 2)};
  const GateSequence seq = synthesize_term(t, 0.3);
  ASSERT_EQ(seq.size(), 1u);
  EXPECT_EQ(seq.gates()[0], Gate::cx(1, 0, 0.3));
  const KvNTerm neg{1, -1, P("x1", 2)};
  EXPECT_EQ(synthesize_term(neg, 0.3).gates()[0], Gate::cx(0, 1, -0.3));
  EXPECT_TRUE(synthesize_term(t, 0.0).empty());
}

TEST(SynthesizeTerm, ConstantFactorIsAFourierConjugatedDisplacement) {
  const GateSequence seq = synthesize_term(KvNTerm{1, -1, P("3", 2)}, 0.5);
  ASSERT_EQ(seq.size(), 3u);
  EXPECT_EQ(seq.gates()[0], Gate::fourier(1));
  EXPECT_EQ(seq.gates()[1], Gate::displacement(1, -1.5));
  EXPECT_EQ(seq.gates()[2], Gate::fourier_inverse(1));
}

TEST(SynthesizeTerm, CubicFactorShape) {
  const KvNTerm t{1, -1, P("x1^3", 2)};
  const GateSequence seq = synthesize_term(t, 0.1);
  ASSERT_GE(seq.size(), 3u);
  EXPECT_EQ(seq.gates().front(), Gate::fourier(1));
  EXPECT_EQ(seq.gates().back(), Gate::fourier_inverse(1));
  std::size_t quartic = 0, cx = 0;
  for (const auto& g : seq.gates()) {
    quartic += g.kind == GateKind::QuarticPhase;
    cx += g.kind == GateKind::ControlledX;
    if (g.kind == GateKind::QuarticPhase) EXPECT_EQ(g.modes[0], 1u);
    if (g.kind == GateKind::ControlledX) EXPECT_EQ(g.modes, (std::array<std::size_t, 2>{0, 1}));
  }
  // (3,0,0): four expansion terms, weights 3, 1, -1, -3, all nonzero.
  EXPECT_EQ(quartic, 4u);
  EXPECT_EQ(cx, 8u);
  EXPECT_EQ(seq.size(), 14u);
}

TEST(SynthesizeTerm, ZeroWeightsAreSkippedAndBoundHolds) {
  const KvNTerm t{0, +1, P("x2^2", 2)};
  const GateSequence seq = synthesize_term(t, 0.2);
  // F, [CX, P, CX], [P], [CX, P, CX], FINV.
  EXPECT_EQ(seq.size(), 9u);
  std::mt19937_64 rng(6);
  const char* factors[] = {"x4", "x4^2", "x4*x5", "x4^3", "x4^2*x6", "x4*x5*x6", "x5^2*x4", "2/3", "-x6^3"};
  for (const char* f : factors) {
    const KvNTerm term{0, +1, P(f, 6)};
    EXPECT_LE(synthesize_term(term, 0.4).size(), synthesis_gate_bound(term)) << f;
  }
  EXPECT_THROW(synthesize_term(KvNTerm{0, 1, P("x1*x2", 2)}, 0.1), std::invalid_argument);
  EXPECT_THROW(synthesize_term(KvNTerm{0, 1, P("x2^4", 2)}, 0.1), AssumptionViolation);
  EXPECT_THROW(synthesize_term(KvNTerm{0, 1, P("x2 + x2^2", 2)}, 0.1), std::invalid_argument);
}

TEST(CxViaCz, UsesOnlyCzAndFourier) {
  const GateSequence seq = cx_via_cz(0, 1, 0.7, 2);
  for (const auto& g : seq.gates())
    EXPECT_TRUE(g.kind == GateKind::ControlledZ || g.kind == GateKind::Fourier || g.kind == GateKind::FourierInverse);
  EXPECT_THROW(cx_via_cz(1, 1, 0.7, 2), std::invalid_argument);
}

TEST(TrotterCircuit, Shapes) {
  const KvNHamiltonian ho = build_kvn(validate_separation(P("1/2*x2^2 + 1/2*x1^2", 2), 1));
  const GateSequence first = trotter_circuit(ho, 1.0, 4, TrotterOrder::First);
  ASSERT_EQ(first.size(), 8u);
  for (const auto& g : first.gates()) {
    EXPECT_EQ(g.kind, GateKind::ControlledX);
    EXPECT_DOUBLE_EQ(std::abs(g.param), 0.25);
  }
  EXPECT_TRUE(trotter_circuit(ho, 0.0, 10).empty());
  const GateSequence second = trotter_circuit(ho, 1.0, 2, TrotterOrder::Second);
  ASSERT_EQ(second.size(), 8u);
  EXPECT_EQ(second.gates()[0], Gate::cx(1, 0, 0.25));
  EXPECT_EQ(second.gates()[1], Gate::cx(0, 1, -0.25));
  EXPECT_EQ(second.gates()[2], Gate::cx(0, 1, -0.25));
  EXPECT_EQ(second.gates()[3], Gate::cx(1, 0, 0.25));
  EXPECT_THROW(trotter_circuit(ho, 1.0, 0), std::invalid_argument);
  EXPECT_THROW(trotter_circuit(ho, std::nan(""), 1), std::invalid_argument);
}

TEST(GateSequence, TextRoundTrip) {
  GateSequence seq(3);
  seq.push_back(Gate::fourier(2));
  seq.push_back(Gate::cx(0, 2, -0.1));
  seq.push_back(Gate::quartic_phase(2, 1.0 / 3.0));
  seq.push_back(Gate::cz(1, 0, 2.5e-17));
  seq.push_back(Gate::rotation(1, 3.141592653589793));
  seq.push_back(Gate::fourier_inverse(2));
  const std::string text = seq.to_text();
  EXPECT_EQ(text.substr(0, 12), "# qumodes 3\n");
  EXPECT_NE(text.find("CX 0,2 -0.1\n"), std::string::npos);
  EXPECT_NE(text.find("F 2\n"), std::string::npos);
  const GateSequence back = GateSequence::parse(text);
  EXPECT_EQ(back, seq);
  EXPECT_EQ(back.to_text(), text);
  EXPECT_THROW(GateSequence::parse("# qumodes 2\nCX 0,0 1\n"), std::invalid_argument);
  EXPECT_THROW(GateSequence::parse("# qumodes 2\nZZ 0 1\n"), std::invalid_argument);
  EXPECT_THROW(GateSequence::parse("# qumodes 2\nD 5 1\n"), std::invalid_argument);
  EXPECT_THROW(seq.push_back(Gate::displacement(0, std::numeric_limits<double>::infinity())), std::invalid_argument);
}

TEST(GateSequence, FormatDoubleRoundTrips) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> unif(-10.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const double v = unif(rng) * std::pow(10.0, static_cast<int>(unif(rng)));
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(-2.0), "-2");
}

TEST(GateSequence, InverseReversesAndNegates) {
  GateSequence seq(2);
  seq.push_back(Gate::fourier(0));
  seq.push_back(Gate::cx(0, 1, 0.5));
  const GateSequence inv = seq.inverse();
  ASSERT_EQ(inv.size(), 2u);
  EXPECT_EQ(inv.gates()[0], Gate::cx(0, 1, -0.5));
  EXPECT_EQ(inv.gates()[1], Gate::fourier_inverse(0));
}

}  // namespace
}  // namespace cvkvn
