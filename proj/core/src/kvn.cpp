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

#include "cvkvn/kvn.hpp"

#include <algorithm>
#include <sstream>

#include "cvkvn/error.hpp"

namespace cvkvn {

namespace {

constexpr const char* kSeparable = "separable Hamiltonian H = V(positions) + T(momenta)";
constexpr const char* kQuartic = "quartic degree bound on V and T";

std::string monomial_literal(std::size_t num_vars, const Monomial& m) {
  return PhasePolynomial::monomial(num_vars, m).to_string();
}

bool touches(const Monomial& m, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i)
    if (m[i] != 0) return true;
  return false;
}

}  // namespace

ClassicalHamiltonian::ClassicalHamiltonian(std::size_t n, PhasePolynomial potential,
                                           PhasePolynomial kinetic)
    : n_(n), potential_(std::move(potential)), kinetic_(std::move(kinetic)) {
  if (n_ < 1) throw std::invalid_argument("Hamiltonian needs at least one degree of freedom");
  if (potential_.num_vars() != 2 * n_ || kinetic_.num_vars() != 2 * n_)
    throw DimensionMismatch("V and T must be polynomials over 2n = " + std::to_string(2 * n_) +
                            " variables");
  for (const auto& [m, c] : potential_.terms())
    if (touches(m, n_, 2 * n_))
      throw AssumptionViolation(kSeparable, "V depends on a momentum coordinate: " +
                                                monomial_literal(2 * n_, m));
  for (const auto& [m, c] : kinetic_.terms())
    if (touches(m, 0, n_))
      throw AssumptionViolation(kSeparable, "T depends on a position coordinate: " +
                                                monomial_literal(2 * n_, m));
  if (potential_.degree() > kMaxHamiltonianDegree)
    throw AssumptionViolation(kQuartic, "V has degree " + std::to_string(potential_.degree()) +
                                            " > " + std::to_string(kMaxHamiltonianDegree));
  if (kinetic_.degree() > kMaxHamiltonianDegree)
    throw AssumptionViolation(kQuartic, "T has degree " + std::to_string(kinetic_.degree()) +
                                            " > " + std::to_string(kMaxHamiltonianDegree));
}

ClassicalHamiltonian validate_separation(const PhasePolynomial& h, std::size_t n) {
  if (n < 1) throw std::invalid_argument("Hamiltonian needs at least one degree of freedom");
  if (h.num_vars() != 2 * n)
    throw DimensionMismatch("Hamiltonian has " + std::to_string(h.num_vars()) +
                            " variables, expected 2n = " + std::to_string(2 * n));
  PhasePolynomial v(2 * n), t(2 * n);
  for (const auto& [m, c] : h.terms()) {
    bool pos = touches(m, 0, n), mom = touches(m, n, 2 * n);
    if (pos && mom)
      throw AssumptionViolation(kSeparable, "position-momentum cross term " +
                                                PhasePolynomial::monomial(2 * n, m, c).to_string());
    (mom ? t : v).add_term(m, c);
  }
  return ClassicalHamiltonian(n, std::move(v), std::move(t));
}

WeylPolynomial KvNTerm::to_weyl() const {
  return WeylPolynomial::from_positions(coefficient()) * WeylPolynomial::P(factor.num_vars(), mode);
}

GeneratorShape classify_generator(const KvNTerm& term) {
  if (term.factor.num_terms() != 1)
    throw std::invalid_argument("generator factor must be a single monomial");
  std::vector<int> exps;
  for (int e : term.factor.terms().begin()->first)
    if (e > 0) exps.push_back(e);
  std::sort(exps.rbegin(), exps.rend());
  if (exps.empty()) return GeneratorShape::Shift;
  if (exps == std::vector<int>{1}) return GeneratorShape::PX;
  if (exps == std::vector<int>{2}) return GeneratorShape::PXX;
  if (exps == std::vector<int>{1, 1}) return GeneratorShape::PXY;
  if (exps == std::vector<int>{3}) return GeneratorShape::PXXX;
  if (exps == std::vector<int>{2, 1}) return GeneratorShape::PXXY;
  if (exps == std::vector<int>{1, 1, 1}) return GeneratorShape::PXYZ;
  throw AssumptionViolation(kQuartic, "generator factor " + term.factor.to_string() +
                                          " exceeds degree three");
}

const char* to_string(GeneratorShape shape) {
  switch (shape) {
    case GeneratorShape::Shift: return "P1";
    case GeneratorShape::PX: return "P1 X2";
    case GeneratorShape::PXX: return "P1 X2^2";
    case GeneratorShape::PXY: return "P1 X2 X3";
    case GeneratorShape::PXXX: return "P1 X2^3";
    case GeneratorShape::PXXY: return "P1 X2^2 X3";
    case GeneratorShape::PXYZ: return "P1 X2 X3 X4";
  }
  return "?";
}

void validate_kvn_term(const KvNTerm& term, std::size_t n) {
  if (term.factor.num_vars() != 2 * n) throw DimensionMismatch("KvN factor must use 2n variables");
  if (term.mode >= 2 * n) throw std::out_of_range("KvN term mode out of range");
  if (term.sign != 1 && term.sign != -1) throw std::invalid_argument("KvN term sign must be +1 or -1");
  if (term.factor.num_terms() != 1) throw std::invalid_argument("KvN factor must be a single monomial");
  if (term.factor.degree() > 3)
    throw AssumptionViolation(kQuartic, "KvN factor " + term.factor.to_string() + " has degree > 3");
  // Position modes pair with momentum factors and vice versa.
  const bool position_mode = term.mode < n;
  const Monomial& m = term.factor.terms().begin()->first;
  if (position_mode ? touches(m, 0, n) : touches(m, n, 2 * n))
    throw AssumptionViolation(kSeparable, "KvN factor " + term.factor.to_string() +
                                              " shares a half of phase space with P" +
                                              std::to_string(term.mode + 1));
}

WeylPolynomial KvNHamiltonian::to_weyl() const {
  WeylPolynomial w(num_modes());
  for (const auto& t : terms) w += t.to_weyl();
  return w;
}

bool KvNHamiltonian::is_quadratic() const {
  return std::all_of(terms.begin(), terms.end(), [](const KvNTerm& t) { return t.generator_degree() <= 2; });
}

std::string KvNHamiltonian::listing() const {
  std::ostringstream os;
  for (const auto& t : terms)
    os << (t.sign > 0 ? '+' : '-') << " P" << t.mode + 1 << " " << t.factor.to_string() << "\n";
  return os.str();
}

KvNHamiltonian build_kvn(const ClassicalHamiltonian& h) {
  const std::size_t n = h.n();
  KvNHamiltonian out{n, {}};
  auto push_monomials = [&](const PhasePolynomial& derivative, std::size_t mode, int sign) {
    for (const auto& [m, c] : derivative.terms()) {
      KvNTerm t{mode, sign, PhasePolynomial::monomial(2 * n, m, c)};
      validate_kvn_term(t, n);
      out.terms.push_back(std::move(t));
    }
  };
  for (std::size_t j = 0; j < n; ++j) {
    push_monomials(h.kinetic().derivative(n + j), j, +1);
    push_monomials(h.potential().derivative(j), n + j, -1);
  }
  return out;
}

PhasePolynomial liouvillian_apply(const PhasePolynomial& h, const PhasePolynomial& f) {
  if (h.num_vars() != f.num_vars())
    throw DimensionMismatch("Liouvillian: H and f use different variable counts");
  if (h.num_vars() % 2 != 0) throw DimensionMismatch("Liouvillian needs an even phase-space dimension");
  const std::size_t n = h.num_vars() / 2;
  PhasePolynomial out(h.num_vars());
  for (std::size_t j = 0; j < n; ++j) {
    out += h.derivative(j) * f.derivative(n + j);
    out -= h.derivative(n + j) * f.derivative(j);
  }
  return out;
}

PhasePolynomial liouvillian_apply(const ClassicalHamiltonian& h, const PhasePolynomial& f) {
  if (f.num_vars() != h.dim())
    throw DimensionMismatch("Liouvillian: f must be a polynomial over 2n variables");
  return liouvillian_apply(h.total(), f);
}

WeylPolynomial liouvillian_generator(const PhasePolynomial& h) {
  if (h.num_vars() % 2 != 0) throw DimensionMismatch("Liouvillian needs an even phase-space dimension");
  const std::size_t dim = h.num_vars(), n = dim / 2;
  WeylPolynomial out(dim);
  for (std::size_t j = 0; j < n; ++j) {
    // L = sum_k c_k d_k with c_{n+j} = dH/dx_j, c_j = -dH/dx_{n+j};
    // i L = sum_k c_k * i * (i P_k) = -sum_k c_k P_k.
    PhasePolynomial c_mom = h.derivative(j);
    PhasePolynomial c_pos = -h.derivative(n + j);
    out -= WeylPolynomial::from_positions(c_mom) * WeylPolynomial::P(dim, n + j);
    out -= WeylPolynomial::from_positions(c_pos) * WeylPolynomial::P(dim, j);
  }
  return out;
}

}  // namespace cvkvn
