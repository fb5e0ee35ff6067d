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

#include <string>
#include <vector>

#include "cvkvn/phase_poly.hpp"
#include "cvkvn/synth.hpp"
#include "cvkvn/weyl.hpp"

namespace cvkvn {

struct ConjugationCheck {
  std::array<int, 4> weights;
  /// Termination depth of each nonzero-weight conjugation, innermost first.
  std::vector<int> depths;
  bool matches = false;
};

/// Outcome of the generator-level proof of
///   U^dagger exp(i s C(v) X1^a) U = exp(i s C(v) (sum_i h_i X_i)^a)
/// for every expansion term, plus the check that the conjugated generators
/// sum back to X1 X2^a2 X3^a3 X4^a4.
struct KeyDecompositionReport {
  ExponentTriple exponents;
  int degree = 0;
  std::vector<ConjugationCheck> terms;
  bool sum_matches = false;

  bool passed() const;
  int max_depth() const;
  /// `a2,a3,a4 a=<deg> terms=<n> depth=<d> PASS|FAIL`
  std::string line() const;
};

/// Works on four qumodes; qumode 0 carries P1/X1.  Throws when a is outside
/// {2, 3, 4}.  A FAIL result indicates a defect in the algebra code.
KeyDecompositionReport verify_key_decomposition(int a2, int a3, int a4);

/// Checks L[f g] = L[f] g + f L[g] exactly, with L built from H.
bool verify_liouvillian_product_rule(const PhasePolynomial& h, const PhasePolynomial& f,
                                     const PhasePolynomial& g);

}  // namespace cvkvn
