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

#include "cvkvn/identities.hpp"

#include <algorithm>
#include <sstream>

#include "cvkvn/error.hpp"
#include "cvkvn/kvn.hpp"

namespace cvkvn {

namespace {
constexpr std::size_t kModes = 4;
}

bool KeyDecompositionReport::passed() const {
  return sum_matches && std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.matches; });
}

int KeyDecompositionReport::max_depth() const {
  int d = 0;
  for (const auto& t : terms)
    for (int x : t.depths) d = std::max(d, x);
  return d;
}

std::string KeyDecompositionReport::line() const {
  std::ostringstream os;
  os << exponents[0] << "," << exponents[1] << "," << exponents[2] << " a=" << degree
     << " terms=" << terms.size() << " depth=" << max_depth() << " " << (passed() ? "PASS" : "FAIL");
  return os.str();
}

KeyDecompositionReport verify_key_decomposition(int a2, int a3, int a4) {
  const auto expansion = expansion_coefficients(a2, a3, a4);
  KeyDecompositionReport report;
  report.exponents = {a2, a3, a4};
  report.degree = 1 + a2 + a3 + a4;
  const int a = report.degree;
  const WeylPolynomial x1_pow = WeylPolynomial::X(kModes, 0).pow(a);
  const WeylPolynomial p1 = WeylPolynomial::P(kModes, 0);

  WeylPolynomial summed(kModes);
  for (const auto& term : expansion) {
    ConjugationCheck check;
    check.weights = term.weights;
    // U^dagger B U = e^{A4} e^{A3} e^{A2} B e^{-A2} e^{-A3} e^{-A4} with
    // A_i = i h_i X_i P_1, so the X2 conjugation is innermost.
    WeylPolynomial conjugated = x1_pow;
    WeylPolynomial linear = WeylPolynomial::X(kModes, 0);
    for (std::size_t i = 1; i < kModes; ++i) {
      const int h = term.weights[i];
      if (h == 0) continue;
      WeylPolynomial generator = WeylPolynomial::X(kModes, i) * p1 * ComplexRational(Rational(0), Rational(h));
      auto r = adjoint_series(generator, conjugated);
      conjugated = std::move(r.value);
      check.depths.push_back(r.depth);
      linear += WeylPolynomial::X(kModes, i) * ComplexRational(Rational(h));
    }
    check.matches = conjugated == linear.pow(a);
    summed += conjugated * ComplexRational(term.coefficient);
    report.terms.push_back(std::move(check));
  }
  WeylPolynomial target = WeylPolynomial::X(kModes, 0);
  for (int i = 0; i < 3; ++i) target = target * WeylPolynomial::X(kModes, i + 1).pow(report.exponents[i]);
  report.sum_matches = summed == target;
  return report;
}

bool verify_liouvillian_product_rule(const PhasePolynomial& h, const PhasePolynomial& f,
                                     const PhasePolynomial& g) {
  if (h.num_vars() != f.num_vars() || h.num_vars() != g.num_vars())
    throw DimensionMismatch("product rule: H, f, g must share the variable count");
  return liouvillian_apply(h, f * g) == liouvillian_apply(h, f) * g + f * liouvillian_apply(h, g);
}

}  // namespace cvkvn
