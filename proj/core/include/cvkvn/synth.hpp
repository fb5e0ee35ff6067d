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

#include <array>
#include <cstddef>
#include <vector>

#include "cvkvn/circuit.hpp"
#include "cvkvn/kvn.hpp"
#include "cvkvn/rational.hpp"

namespace cvkvn {

/// Exponents (a2, a3, a4) of the control quadratures in P1 X2^a2 X3^a3 X4^a4.
using ExponentTriple = std::array<int, 3>;

/// Every ordered triple with 1 + a2 + a3 + a4 in {2, 3, 4}.
std::vector<ExponentTriple> admissible_triples();
/// The sorted representatives a2 >= a3 >= a4 (one per catalog generator).
std::vector<ExponentTriple> canonical_triples();

/// One summand C(v) (sum_i h_i x_i)^a of the monomial expansion, with
/// weights h = (1, a2 - 2 v2, a3 - 2 v3, a4 - 2 v4).
struct ExpansionTerm {
  Rational coefficient;
  std::array<int, 4> weights;
  std::array<int, 3> v;
};

/// x1 x2^a2 x3^a3 x4^a4 = sum_v C(v) (sum_i h_i x_i)^a with
/// C(v) = (-1)^{|v|} / (2^{a-1} a!) prod_i binom(a_i, v_i), enumerated with v
/// in lexicographic order.  Throws when a is outside {2, 3, 4}.
std::vector<ExpansionTerm> expansion_coefficients(int a2, int a3, int a4);

/// Lowers exp(-i s * sign * factor(X) * P_mode) to elementary gates over
/// `factor.num_vars()` qumodes:
///  - constant factor c: F, D(s c), F^dagger on the term's mode;
///  - linear factor c x_k: a single CX_{k,mode}(s c);
///  - otherwise F on the mode, then per expansion term the CX conjugation
///    (zero weights skipped) around the phase gate of order a, then F^dagger.
/// `factor` must be a single monomial of degree <= 3 not involving X_mode.
GateSequence synthesize_term(const KvNTerm& term, double s);

/// Upper bound on the gate count of synthesize_term: 3 for a constant factor,
/// 1 for a linear one, 2 + 7 * (#expansion terms) otherwise.
std::size_t synthesis_gate_bound(const KvNTerm& term);

/// CX_jk(s) from CZ and Fourier gates: F_k, CZ_jk(s), F_k^dagger.
GateSequence cx_via_cz(std::size_t j, std::size_t k, double s, std::size_t num_modes);

enum class TrotterOrder { First = 1, Second = 2 };

/// Product-formula circuit for exp(-i t H_KvN).  First order repeats the
/// per-term sweep with step t/n_steps; second order uses the symmetric sweep
/// (forward half step, then reversed half step).  t = 0 yields an empty circuit.
GateSequence trotter_circuit(const KvNHamiltonian& h, double t, int n_steps,
                             TrotterOrder order = TrotterOrder::First);

}  // namespace cvkvn
