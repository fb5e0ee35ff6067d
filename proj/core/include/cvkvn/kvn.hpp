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
#include <string>
#include <vector>

#include "cvkvn/phase_poly.hpp"
#include "cvkvn/weyl.hpp"

namespace cvkvn {

/// Largest polynomial degree accepted for V and T.
inline constexpr int kMaxHamiltonianDegree = 4;

/// Separable classical Hamiltonian H = V(x1..xn) + T(xn+1..x2n).  Both parts
/// live in the full 2n-variable space.
class ClassicalHamiltonian {
 public:
  /// Validates supports and degrees; throws AssumptionViolation.
  ClassicalHamiltonian(std::size_t n, PhasePolynomial potential, PhasePolynomial kinetic);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return 2 * n_; }
  const PhasePolynomial& potential() const { return potential_; }
  const PhasePolynomial& kinetic() const { return kinetic_; }
  PhasePolynomial total() const { return potential_ + kinetic_; }

 private:
  std::size_t n_;
  PhasePolynomial potential_;
  PhasePolynomial kinetic_;
};

/// Splits a raw Hamiltonian into V + T.  Constants go to V.  Throws
/// AssumptionViolation naming the first cross-term monomial, or the degree
/// bound when a part exceeds quartic order.
ClassicalHamiltonian validate_separation(const PhasePolynomial& h, std::size_t n);

/// One summand sign * factor(X) * P_mode of the KvN Hamiltonian.  Modes are
/// zero-based qumode indices; qumode k carries phase-space coordinate x_{k+1}.
struct KvNTerm {
  std::size_t mode = 0;
  int sign = 1;
  PhasePolynomial factor{1};

  /// sign * factor, the full coefficient multiplying P_mode.
  PhasePolynomial coefficient() const { return factor * Rational(sign); }
  /// Degree of the generator factor(X) * P_mode.
  int generator_degree() const { return factor.degree() + 1; }
  WeylPolynomial to_weyl() const;
};

/// Shapes of controlled-shift generators, i.e. Table-style catalog entries up
/// to mode relabeling.  `Shift` is the constant-factor case exp(-i s P_j).
enum class GeneratorShape { Shift, PX, PXX, PXY, PXXX, PXXY, PXYZ };

GeneratorShape classify_generator(const KvNTerm& term);
const char* to_string(GeneratorShape shape);

/// Checks the KvN term invariants for a system with n degrees of freedom:
/// single-monomial factor, degree at most three, and the factor only depends
/// on the coordinates conjugate to the term's half of phase space.
void validate_kvn_term(const KvNTerm& term, std::size_t n);

struct KvNHamiltonian {
  std::size_t n = 0;
  std::vector<KvNTerm> terms;

  std::size_t num_modes() const { return 2 * n; }
  /// sum_t sign_t * factor_t(X) * P_{mode_t}.
  WeylPolynomial to_weyl() const;
  /// True when every generator has degree at most two.
  bool is_quadratic() const;
  /// One line per term: `sign mode factor`, modes one-based.
  std::string listing() const;
};

/// Builds H_KvN = sum_j (dT/dx_{n+j} P_j - dV/dx_j P_{n+j}) with one term per
/// monomial of each partial derivative.
KvNHamiltonian build_kvn(const ClassicalHamiltonian& h);

/// L[f] = sum_j (dH/dx_j df/dx_{n+j} - dH/dx_{n+j} df/dx_j) for a general
/// polynomial H over 2n variables.
PhasePolynomial liouvillian_apply(const PhasePolynomial& h, const PhasePolynomial& f);
PhasePolynomial liouvillian_apply(const ClassicalHamiltonian& h, const PhasePolynomial& f);

/// i*L written as a Weyl polynomial through d/dx_k = i P_k.  Independent of
/// build_kvn; used to cross-check it.
WeylPolynomial liouvillian_generator(const PhasePolynomial& h);

}  // namespace cvkvn
