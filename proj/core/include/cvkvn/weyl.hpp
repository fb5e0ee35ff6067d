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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cvkvn/phase_poly.hpp"
#include "cvkvn/rational.hpp"

namespace cvkvn {

/// Exact complex number with rational parts (a Gaussian rational).
struct ComplexRational {
  Rational re{0};
  Rational im{0};

  ComplexRational() = default;
  ComplexRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  static ComplexRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  ComplexRational conj() const { return {re, -im}; }

  ComplexRational& operator+=(const ComplexRational& o);
  ComplexRational& operator-=(const ComplexRational& o);
  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b);
  ComplexRational operator-() const { return {-re, -im}; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) = default;
};

std::string to_string(const ComplexRational& c);

/// Normal-ordered polynomial in the quadratures X_j, P_j of `num_modes`
/// qumodes with [X_j, P_k] = i delta_jk.
///
/// A key stores 2*num_modes exponents laid out (aX_0, aP_0, aX_1, aP_1, ...);
/// the monomial it names is prod_j X_j^{aX_j} P_j^{aP_j} with every X of a
/// mode to the left of every P of the same mode.  Different modes commute,
/// so this form is canonical and term-map equality is operator equality.
class WeylPolynomial {
 public:
  using Key = std::vector<int>;
  using TermMap = std::map<Key, ComplexRational>;

  explicit WeylPolynomial(std::size_t num_modes);

  static WeylPolynomial identity(std::size_t num_modes, const ComplexRational& c = Rational(1));
  static WeylPolynomial X(std::size_t num_modes, std::size_t mode);
  static WeylPolynomial P(std::size_t num_modes, std::size_t mode);
  /// Embeds a commuting polynomial in the position quadratures; variable k
  /// of `p` becomes X_k, so `p.num_vars()` must equal `num_modes`.
  static WeylPolynomial from_positions(const PhasePolynomial& p);

  std::size_t num_modes() const { return num_modes_; }
  const TermMap& terms() const& { return terms_; }
  /// Moves the terms out of a temporary, so `for (auto& t : f().terms())` is safe.
  TermMap terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree in X and P; -1 for zero.
  int degree() const;
  /// Largest combined X/P exponent of any single mode.
  int max_mode_degree() const;

  void add_term(const Key& key, const ComplexRational& c);

  WeylPolynomial& operator+=(const WeylPolynomial& o);
  WeylPolynomial& operator-=(const WeylPolynomial& o);
  WeylPolynomial& operator*=(const ComplexRational& c);
  friend WeylPolynomial operator+(WeylPolynomial a, const WeylPolynomial& b) { return a += b; }
  friend WeylPolynomial operator-(WeylPolynomial a, const WeylPolynomial& b) { return a -= b; }
  friend WeylPolynomial operator*(WeylPolynomial a, const ComplexRational& c) { return a *= c; }
  friend WeylPolynomial operator*(const ComplexRational& c, WeylPolynomial a) { return a *= c; }
  /// Operator product, re-normal-ordered.
  friend WeylPolynomial operator*(const WeylPolynomial& a, const WeylPolynomial& b);

  WeylPolynomial pow(int k) const;
  /// Hermitian adjoint: conjugate coefficients, reverse factor order.
  WeylPolynomial adjoint() const;

  friend bool operator==(const WeylPolynomial& a, const WeylPolynomial& b) {
    return a.num_modes_ == b.num_modes_ && a.terms_ == b.terms_;
  }

  /// Human-readable form with one-based mode labels, e.g. `(1)*X1^2*P1 + (-2i)*X1`.
  std::string to_string() const;

 private:
  void require_same_modes(const WeylPolynomial& o, const char* op) const;

  std::size_t num_modes_;
  TermMap terms_;
};

WeylPolynomial weyl_mul(const WeylPolynomial& a, const WeylPolynomial& b);
WeylPolynomial commutator(const WeylPolynomial& a, const WeylPolynomial& b);

struct AdjointSeriesResult {
  WeylPolynomial value;
  /// Largest k with ad_A^k(B) != 0 (zero when A commutes with B).
  int depth = 0;
};

/// Default depth bound: degree(B) * max_mode_degree(A) + 2.
int default_adjoint_depth(const WeylPolynomial& a, const WeylPolynomial& b);

/// Exact e^A B e^{-A} = sum_k ad_A^k(B) / k!, provided the nested
/// commutators vanish at some depth not exceeding `max_depth`.  Throws
/// NonTerminatingSeries otherwise; the series is never truncated.
AdjointSeriesResult adjoint_series(const WeylPolynomial& a, const WeylPolynomial& b,
                                   std::optional<int> max_depth = std::nullopt);

}  // namespace cvkvn
