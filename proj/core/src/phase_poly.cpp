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

#include "cvkvn/phase_poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "cvkvn/error.hpp"

namespace cvkvn {

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

PhasePolynomial::PhasePolynomial(std::size_t num_vars) : num_vars_(num_vars) {
  if (num_vars == 0) throw std::invalid_argument("PhasePolynomial needs at least one variable");
}

PhasePolynomial PhasePolynomial::constant(std::size_t num_vars, const Rational& c) {
  PhasePolynomial p(num_vars);
  p.add_term(Monomial(num_vars, 0), c);
  return p;
}

PhasePolynomial PhasePolynomial::variable(std::size_t num_vars, std::size_t var) {
  if (var >= num_vars) throw std::out_of_range("variable index out of range");
  Monomial m(num_vars, 0);
  m[var] = 1;
  return monomial(num_vars, std::move(m));
}

PhasePolynomial PhasePolynomial::monomial(std::size_t num_vars, Monomial exponents,
                                          const Rational& c) {
  if (exponents.size() != num_vars) throw DimensionMismatch("monomial length differs from num_vars");
  if (std::any_of(exponents.begin(), exponents.end(), [](int e) { return e < 0; }))
    throw std::invalid_argument("negative exponent");
  PhasePolynomial p(num_vars);
  p.add_term(exponents, c);
  return p;
}

int PhasePolynomial::degree() const {
  // Terms are sorted by total degree, so the last one is the largest.
  return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
}

int PhasePolynomial::degree_in(std::size_t var) const {
  if (var >= num_vars_) throw std::out_of_range("variable index out of range");
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

Rational PhasePolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PhasePolynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != num_vars_) throw DimensionMismatch("monomial length differs from num_vars");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void PhasePolynomial::require_same_dims(const PhasePolynomial& q, const char* op) const {
  if (num_vars_ != q.num_vars_)
    throw DimensionMismatch(std::string("PhasePolynomial ") + op + ": " + std::to_string(num_vars_) +
                            " vs " + std::to_string(q.num_vars_) + " variables");
}

PhasePolynomial& PhasePolynomial::operator+=(const PhasePolynomial& q) {
  require_same_dims(q, "add");
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

PhasePolynomial& PhasePolynomial::operator-=(const PhasePolynomial& q) {
  require_same_dims(q, "sub");
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

PhasePolynomial& PhasePolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

PhasePolynomial operator*(const PhasePolynomial& p, const PhasePolynomial& q) {
  p.require_same_dims(q, "mul");
  PhasePolynomial r(p.num_vars_);
  Monomial m(p.num_vars_);
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = mp[i] + mq[i];
      r.add_term(m, cp * cq);
    }
  }
  return r;
}

PhasePolynomial PhasePolynomial::operator-() const {
  PhasePolynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

PhasePolynomial PhasePolynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  PhasePolynomial r = constant(num_vars_, Rational(1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

PhasePolynomial PhasePolynomial::derivative(std::size_t var) const {
  if (var >= num_vars_)
    throw std::out_of_range("derivative: variable index " + std::to_string(var) + " out of range");
  PhasePolynomial r(num_vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, c * m[var]);
  }
  return r;
}

double PhasePolynomial::evaluate(std::span<const double> point) const {
  if (point.size() != num_vars_)
    throw DimensionMismatch("evaluate: point has " + std::to_string(point.size()) +
                            " coordinates, polynomial has " + std::to_string(num_vars_));
  std::vector<int> max_exp(num_vars_, 0);
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < num_vars_; ++i) max_exp[i] = std::max(max_exp[i], m[i]);
  std::vector<std::vector<double>> powers(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) {
    powers[i].resize(max_exp[i] + 1);
    powers[i][0] = 1.0;
    for (int e = 1; e <= max_exp[i]; ++e) powers[i][e] = powers[i][e - 1] * point[i];
  }
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = to_double(c);
    for (std::size_t i = 0; i < num_vars_; ++i) t *= powers[i][m[i]];
    sum += t;
  }
  return sum;
}

namespace {

// `c * x1^2 * x3`, with a unit coefficient left implicit on non-constant
// monomials.  `c` is non-negative here; signs are handled by the caller.
std::string format_term(const Rational& c, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += " * ";
    out += "x" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  if (out.empty()) return cvkvn::to_string(c);
  if (c == 1) return out;
  return cvkvn::to_string(c) + " * " + out;
}

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  struct Term {
    Rational coefficient{1};
    std::vector<std::pair<std::size_t, int>> factors;  // (zero-based var, exponent)
  };

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial literal");
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    for (;;) {
      Term t = parse_term();
      if (negative) t.coefficient = -t.coefficient;
      terms.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      char c = get();
      if (c != '+' && c != '-') fail(std::string("expected '+' or '-', found '") + c + "'");
      negative = c == '-';
    }
    return terms;
  }

 private:
  Term parse_term() {
    Term t;
    parse_factor(t);
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      get();
      parse_factor(t);
    }
    return t;
  }

  void parse_factor(Term& t) {
    skip_ws();
    if (at_end()) fail("unexpected end of literal");
    if (peek() == 'x' || peek() == 'X') {
      get();
      long idx = parse_integer();
      if (idx < 1) fail("variable indices start at x1");
      int exponent = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        get();
        exponent = static_cast<int>(parse_integer());
      }
      t.factors.emplace_back(static_cast<std::size_t>(idx - 1), exponent);
      return;
    }
    Rational value = parse_number();
    skip_ws();
    if (!at_end() && peek() == '/') {
      get();
      Rational den = parse_number();
      if (den == 0) fail("division by zero");
      value /= den;
    }
    t.coefficient *= value;
  }

  long parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  Rational parse_number() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) ++pos_;
    if (start == pos_) fail(std::string("unexpected character '") + peek() + "'");
    if (!at_end() && (peek() == 'e' || peek() == 'E')) {
      ++pos_;
      if (!at_end() && (peek() == '+' || peek() == '-')) ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("polynomial literal, column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string PhasePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const Rational magnitude = c < 0 ? Rational(-c) : c;
    if (first) {
      out += (c < 0 ? "-" : "") + format_term(magnitude, m);
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + format_term(magnitude, m);
    }
  }
  return out;
}

PhasePolynomial PhasePolynomial::parse(std::string_view text, std::size_t num_vars) {
  auto terms = LiteralParser(text).parse();
  std::size_t needed = 1;
  for (const auto& t : terms)
    for (const auto& [var, e] : t.factors) needed = std::max(needed, var + 1);
  if (num_vars == 0) num_vars = needed;
  if (needed > num_vars)
    throw DimensionMismatch("polynomial literal mentions x" + std::to_string(needed) + " but only " +
                            std::to_string(num_vars) + " variables are available");
  PhasePolynomial p(num_vars);
  for (const auto& t : terms) {
    Monomial m(num_vars, 0);
    for (const auto& [var, e] : t.factors) m[var] += e;
    p.add_term(m, t.coefficient);
  }
  return p;
}

NumericPolynomial::NumericPolynomial(const PhasePolynomial& p) : num_vars_(p.num_vars()) {
  offsets_.push_back(0);
  for (const auto& [m, c] : p.terms()) {
    coefficients_.push_back(to_double(c));
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) factors_.emplace_back(static_cast<int>(i), m[i]);
    offsets_.push_back(factors_.size());
  }
}

double NumericPolynomial::operator()(std::span<const double> point) const {
  double sum = 0.0;
  for (std::size_t t = 0; t < coefficients_.size(); ++t) {
    double v = coefficients_[t];
    for (std::size_t f = offsets_[t]; f < offsets_[t + 1]; ++f) {
      double x = point[factors_[f].first];
      for (int e = 0; e < factors_[f].second; ++e) v *= x;
    }
    sum += v;
  }
  return sum;
}

SymplecticStructure::SymplecticStructure(std::size_t n) : n_(n), entries_(4 * n * n, Rational(0)) {
  if (n == 0) throw std::invalid_argument("symplectic structure needs n >= 1");
  for (std::size_t j = 0; j < n; ++j) {
    entries_[j * dim() + (n + j)] = 1;
    entries_[(n + j) * dim() + j] = -1;
  }
}

std::vector<Rational> SymplecticStructure::squared() const {
  const std::size_t d = dim();
  std::vector<Rational> out(d * d, Rational(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < d; ++j) out[i * d + j] += (*this)(i, k) * (*this)(k, j);
    }
  return out;
}

bool SymplecticStructure::squares_to_minus_identity() const {
  auto sq = squared();
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (sq[i * d + j] != (i == j ? Rational(-1) : Rational(0))) return false;
  return true;
}

bool SymplecticStructure::is_antisymmetric() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

}  // namespace cvkvn
