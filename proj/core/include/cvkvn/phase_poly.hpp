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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cvkvn/rational.hpp"

namespace cvkvn {

/// Exponent multi-index, one entry per phase-space variable.
using Monomial = std::vector<int>;

/// Graded lexicographic order: lower total degree first, then lexicographic
/// with x1 most significant.  Canonical serialization walks terms ascending.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

int total_degree(const Monomial& m);

/// Real multivariate polynomial with exact rational coefficients over the
/// phase-space coordinates (x1..xn positions, xn+1..x2n momenta).
///
/// Zero coefficients are never stored, so structural equality of the term
/// maps is polynomial equality.
class PhasePolynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  explicit PhasePolynomial(std::size_t num_vars);

  static PhasePolynomial constant(std::size_t num_vars, const Rational& c);
  /// The coordinate x_{var+1} (zero-based index).
  static PhasePolynomial variable(std::size_t num_vars, std::size_t var);
  static PhasePolynomial monomial(std::size_t num_vars, Monomial exponents,
                                  const Rational& c = Rational(1));

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const& { return terms_; }
  /// Moves the terms out of a temporary, so `for (auto& t : f().terms())` is safe.
  TermMap terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  /// Total degree; the zero polynomial reports -1.
  int degree() const;
  int degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }
  /// Coefficient of the given monomial (zero when absent).
  Rational coefficient(const Monomial& m) const;

  /// Adds `c * x^m`, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  PhasePolynomial& operator+=(const PhasePolynomial& q);
  PhasePolynomial& operator-=(const PhasePolynomial& q);
  PhasePolynomial& operator*=(const Rational& c);

  friend PhasePolynomial operator+(PhasePolynomial p, const PhasePolynomial& q) { return p += q; }
  friend PhasePolynomial operator-(PhasePolynomial p, const PhasePolynomial& q) { return p -= q; }
  friend PhasePolynomial operator*(PhasePolynomial p, const Rational& c) { return p *= c; }
  friend PhasePolynomial operator*(const Rational& c, PhasePolynomial p) { return p *= c; }
  friend PhasePolynomial operator*(const PhasePolynomial& p, const PhasePolynomial& q);
  PhasePolynomial operator-() const;

  PhasePolynomial pow(int k) const;
  PhasePolynomial derivative(std::size_t var) const;

  /// Evaluates with per-variable power tables; `point.size()` must equal
  /// `num_vars()`.
  double evaluate(std::span<const double> point) const;

  /// Literal form, e.g. `1/2 * x2^2 + 1/2 * x1^2`.  Terms ascend in grlex
  /// order; the zero polynomial prints as `0`.
  std::string to_string() const;

  /// Parses the literal form.  Accepts optional coefficients, `-` between
  /// terms, repeated factors and `^1`.  When `num_vars` is zero the variable
  /// count is the largest index mentioned.
  static PhasePolynomial parse(std::string_view text, std::size_t num_vars = 0);

  friend bool operator==(const PhasePolynomial& p, const PhasePolynomial& q) {
    return p.num_vars_ == q.num_vars_ && p.terms_ == q.terms_;
  }

 private:
  void require_same_dims(const PhasePolynomial& q, const char* op) const;

  std::size_t num_vars_;
  TermMap terms_;
};

/// Floating-point image of a PhasePolynomial for hot evaluation loops
/// (classical integrators, grid phases).
class NumericPolynomial {
 public:
  NumericPolynomial() = default;
  explicit NumericPolynomial(const PhasePolynomial& p);

  std::size_t num_vars() const { return num_vars_; }
  double operator()(std::span<const double> point) const;
  bool is_zero() const { return coefficients_.empty(); }

 private:
  std::size_t num_vars_ = 0;
  std::vector<double> coefficients_;
  // Flattened (variable, exponent) factor lists; term t owns
  // factors_[offsets_[t] .. offsets_[t+1]).
  std::vector<std::pair<int, int>> factors_;
  std::vector<std::size_t> offsets_;
};

/// The canonical symplectic matrix J = [[0, I], [-I, 0]] in exact arithmetic.
class SymplecticStructure {
 public:
  explicit SymplecticStructure(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return 2 * n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim() + j]; }

  /// Exact J * J.
  std::vector<Rational> squared() const;
  bool squares_to_minus_identity() const;
  bool is_antisymmetric() const;

 private:
  std::size_t n_;
  std::vector<Rational> entries_;
};

}  // namespace cvkvn
