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

#include "cvkvn/weyl.hpp"

#include <algorithm>
#include <stdexcept>

#include "cvkvn/error.hpp"

namespace cvkvn {

ComplexRational& ComplexRational::operator+=(const ComplexRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

std::string to_string(const ComplexRational& c) {
  if (c.im == 0) return to_string(c.re);
  std::string imag = (c.im == 1 ? "" : c.im == -1 ? "-" : to_string(c.im)) + "i";
  if (c.re == 0) return imag;
  return to_string(c.re) + (c.im < 0 ? "" : "+") + imag;
}

namespace {

// (-i)^k
ComplexRational minus_i_pow(int k) {
  switch (k % 4) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(-1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(1)};
  }
}

struct ModeTerm {
  int x;
  int p;
  ComplexRational c;
};

// X^a P^b X^c P^d = sum_k C(b,k) C(c,k) k! (-i)^k X^{a+c-k} P^{b+d-k}
std::vector<ModeTerm> single_mode_product(int a, int b, int c, int d) {
  std::vector<ModeTerm> out;
  for (int k = 0; k <= std::min(b, c); ++k) {
    ComplexRational coef = minus_i_pow(k) * ComplexRational(binomial(b, k) * binomial(c, k) * factorial(k));
    out.push_back({a + c - k, b + d - k, coef});
  }
  return out;
}

}  // namespace

WeylPolynomial::WeylPolynomial(std::size_t num_modes) : num_modes_(num_modes) {
  if (num_modes == 0) throw std::invalid_argument("WeylPolynomial needs at least one mode");
}

WeylPolynomial WeylPolynomial::identity(std::size_t num_modes, const ComplexRational& c) {
  WeylPolynomial w(num_modes);
  w.add_term(Key(2 * num_modes, 0), c);
  return w;
}

WeylPolynomial WeylPolynomial::X(std::size_t num_modes, std::size_t mode) {
  if (mode >= num_modes) throw std::out_of_range("mode index out of range");
  WeylPolynomial w(num_modes);
  Key k(2 * num_modes, 0);
  k[2 * mode] = 1;
  w.add_term(k, Rational(1));
  return w;
}

WeylPolynomial WeylPolynomial::P(std::size_t num_modes, std::size_t mode) {
  if (mode >= num_modes) throw std::out_of_range("mode index out of range");
  WeylPolynomial w(num_modes);
  Key k(2 * num_modes, 0);
  k[2 * mode + 1] = 1;
  w.add_term(k, Rational(1));
  return w;
}

WeylPolynomial WeylPolynomial::from_positions(const PhasePolynomial& p) {
  WeylPolynomial w(p.num_vars());
  for (const auto& [m, c] : p.terms()) {
    Key k(2 * p.num_vars(), 0);
    for (std::size_t j = 0; j < m.size(); ++j) k[2 * j] = m[j];
    w.add_term(k, c);
  }
  return w;
}

int WeylPolynomial::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) {
    int s = 0;
    for (int e : k) s += e;
    d = std::max(d, s);
  }
  return d;
}

int WeylPolynomial::max_mode_degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_)
    for (std::size_t j = 0; j < num_modes_; ++j) d = std::max(d, k[2 * j] + k[2 * j + 1]);
  return d;
}

void WeylPolynomial::add_term(const Key& key, const ComplexRational& c) {
  if (key.size() != 2 * num_modes_) throw DimensionMismatch("Weyl key length differs from 2*num_modes");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void WeylPolynomial::require_same_modes(const WeylPolynomial& o, const char* op) const {
  if (num_modes_ != o.num_modes_)
    throw DimensionMismatch(std::string("WeylPolynomial ") + op + ": " + std::to_string(num_modes_) +
                            " vs " + std::to_string(o.num_modes_) + " modes");
}

WeylPolynomial& WeylPolynomial::operator+=(const WeylPolynomial& o) {
  require_same_modes(o, "add");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

WeylPolynomial& WeylPolynomial::operator-=(const WeylPolynomial& o) {
  require_same_modes(o, "sub");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

WeylPolynomial& WeylPolynomial::operator*=(const ComplexRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v = v * c;
  return *this;
}

WeylPolynomial operator*(const WeylPolynomial& a, const WeylPolynomial& b) {
  a.require_same_modes(b, "mul");
  const std::size_t n = a.num_modes_;
  WeylPolynomial out(n);
  std::vector<std::vector<ModeTerm>> per_mode(n);
  std::vector<std::size_t> idx(n);
  WeylPolynomial::Key key(2 * n);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      for (std::size_t j = 0; j < n; ++j)
        per_mode[j] = single_mode_product(ka[2 * j], ka[2 * j + 1], kb[2 * j], kb[2 * j + 1]);
      // Cartesian product over the per-mode expansions.
      std::fill(idx.begin(), idx.end(), 0);
      const ComplexRational base = ca * cb;
      for (;;) {
        ComplexRational coef = base;
        for (std::size_t j = 0; j < n; ++j) {
          const ModeTerm& t = per_mode[j][idx[j]];
          key[2 * j] = t.x;
          key[2 * j + 1] = t.p;
          coef = coef * t.c;
        }
        out.add_term(key, coef);
        std::size_t j = 0;
        while (j < n && ++idx[j] == per_mode[j].size()) idx[j++] = 0;
        if (j == n) break;
      }
    }
  }
  return out;
}

WeylPolynomial WeylPolynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  WeylPolynomial r = identity(num_modes_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

WeylPolynomial WeylPolynomial::adjoint() const {
  // (c X^a P^b)^dagger = conj(c) P^b X^a, re-ordered mode by mode.
  WeylPolynomial out(num_modes_);
  for (const auto& [k, c] : terms_) {
    WeylPolynomial term = identity(num_modes_, c.conj());
    for (std::size_t j = 0; j < num_modes_; ++j) {
      Key pk(2 * num_modes_, 0), xk(2 * num_modes_, 0);
      pk[2 * j + 1] = k[2 * j + 1];
      xk[2 * j] = k[2 * j];
      WeylPolynomial pf(num_modes_), xf(num_modes_);
      pf.add_term(pk, Rational(1));
      xf.add_term(xk, Rational(1));
      term = term * pf * xf;
    }
    out += term;
  }
  return out;
}

std::string WeylPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + cvkvn::to_string(c) + ")";
    for (std::size_t j = 0; j < num_modes_; ++j) {
      for (int q = 0; q < 2; ++q) {
        int e = k[2 * j + q];
        if (e == 0) continue;
        out += std::string("*") + (q == 0 ? "X" : "P") + std::to_string(j + 1);
        if (e > 1) out += "^" + std::to_string(e);
      }
    }
  }
  return out;
}

WeylPolynomial weyl_mul(const WeylPolynomial& a, const WeylPolynomial& b) { return a * b; }

WeylPolynomial commutator(const WeylPolynomial& a, const WeylPolynomial& b) { return a * b - b * a; }

int default_adjoint_depth(const WeylPolynomial& a, const WeylPolynomial& b) {
  return std::max(b.degree(), 0) * a.max_mode_degree() + 2;
}

AdjointSeriesResult adjoint_series(const WeylPolynomial& a, const WeylPolynomial& b,
                                   std::optional<int> max_depth) {
  if (a.num_modes() != b.num_modes())
    throw DimensionMismatch("adjoint_series: operands act on different mode counts");
  const int limit = max_depth.value_or(default_adjoint_depth(a, b));
  AdjointSeriesResult result{b, 0};
  WeylPolynomial nested = b;
  Rational inv_factorial = 1;
  for (int k = 1; k <= limit + 1; ++k) {
    nested = commutator(a, nested);
    if (nested.is_zero()) return result;
    if (k > limit) break;
    inv_factorial /= k;
    result.value += nested * ComplexRational(inv_factorial);
    result.depth = k;
  }
  throw NonTerminatingSeries("nested commutators do not vanish within depth " + std::to_string(limit));
}

}  // namespace cvkvn
