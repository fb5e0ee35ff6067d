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

#include <cmath>
#include <random>
#include <vector>

#include "cvkvn/error.hpp"
#include "cvkvn/phase_poly.hpp"
#include "cvkvn/rational.hpp"
#include "test_util.hpp"

namespace cvkvn {
namespace {

PhasePolynomial P(const char* text, std::size_t n) { return PhasePolynomial::parse(text, n); }

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-1/2"), Rational(-1) / 2);
  EXPECT_EQ(parse_rational("0.25"), Rational(1) / 4);
  EXPECT_EQ(parse_rational("-1.5e-2"), Rational(-3) / 200);
  EXPECT_EQ(parse_rational("6/4"), Rational(3) / 2);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_EQ(to_string(Rational(-7) / 14), "-1/2");
  EXPECT_EQ(to_string(Rational(4)), "4");
}

TEST(Rational, BinomialMatchesPascal) {
  auto pascal = testing_util::pascal_triangle(12);
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), Rational(pascal[n][k])) << n << "," << k;
  EXPECT_EQ(binomial(3, 5), Rational(0));
  EXPECT_EQ(factorial(5), Rational(120));
}

TEST(PhasePolynomial, AddExamples) {
  EXPECT_TRUE((P("x1", 2) + P("-x1", 2)).is_zero());
  EXPECT_EQ((P("1/2*x1^2", 2) + P("1/2*x2^2", 2)).to_string(), "1/2 * x2^2 + 1/2 * x1^2");
  EXPECT_EQ(P("x1*x2", 2) + P("x1*x2", 2), P("2*x1*x2", 2));
  EXPECT_THROW(P("x1", 1) + P("x1", 2), DimensionMismatch);
}

TEST(PhasePolynomial, MulExamples) {
  EXPECT_EQ(P("x1 + x2", 2) * P("x1 - x2", 2), P("x1^2 - x2^2", 2));
  EXPECT_TRUE((PhasePolynomial(2) * P("x1 + 3", 2)).is_zero());
  // Binomial theorem oracle: coefficient of x1^(3-k) x2^k is C(3,k) 2^k.
  const PhasePolynomial cube = P("x1 + 2*x2", 2).pow(3);
  auto pascal = testing_util::pascal_triangle(3);
  ASSERT_EQ(cube.num_terms(), 4u);
  for (int k = 0; k <= 3; ++k)
    EXPECT_EQ(cube.coefficient({3 - k, k}), Rational(pascal[3][k] * (1 << k)));
  EXPECT_EQ(cube, P("x1^3 + 6*x1^2*x2 + 12*x1*x2^2 + 8*x2^3", 2));
}

TEST(PhasePolynomial, DerivativeExamples) {
  EXPECT_EQ(P("x1^2", 1).derivative(0), P("2*x1", 1));
  EXPECT_EQ(P("1/2*x2^2", 2).derivative(1), P("x2", 2));
  // Power rule applied term by term: d/dx (x^2/2 + x^4/40) = x + x^3/10.
  const PhasePolynomial v = P("1/2*x1^2 + 1/10*1/4*x1^4", 1);
  EXPECT_EQ(v.derivative(0), P("x1 + 1/10*x1^3", 1));
  EXPECT_THROW(v.derivative(1), std::out_of_range);
}

TEST(PhasePolynomial, EvaluateExamples) {
  const std::vector<double> a{3.0, 4.0};
  EXPECT_DOUBLE_EQ(P("x1*x2", 2).evaluate(a), 12.0);
  const std::vector<double> z{0.0, 0.0};
  EXPECT_DOUBLE_EQ(P("x1^2 + x2^2", 2).evaluate(z), 0.0);
  const std::vector<double> b{2.0, 7.0};
  EXPECT_DOUBLE_EQ(P("x1 + x1^3", 2).evaluate(b), 10.0);
  EXPECT_THROW(P("x1", 2).evaluate(std::vector<double>{1.0}), DimensionMismatch);
}

TEST(PhasePolynomial, LiteralFormatRoundTrips) {
  const PhasePolynomial h = P("1/2 * x2^2 + 1/2 * x1^2", 2);
  EXPECT_EQ(h.to_string(), "1/2 * x2^2 + 1/2 * x1^2");
  EXPECT_EQ(PhasePolynomial(3).to_string(), "0");
  EXPECT_EQ(P("3 - x1 - 2/3*x1*x3^2", 3).to_string(), "3 - x1 - 2/3 * x1 * x3^2");
  EXPECT_EQ(P("x1*x1*x2^1", 2), P("x1^2*x2", 2));
  EXPECT_THROW(P("x1 +", 2), std::invalid_argument);
  EXPECT_THROW(P("x3", 2), std::invalid_argument);
  EXPECT_THROW(P("x0", 2), std::invalid_argument);
  EXPECT_EQ(PhasePolynomial::parse("x4").num_vars(), 4u);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const PhasePolynomial p = testing_util::random_polynomial(rng, 1 + trial % 6, 4, 6);
    const std::string text = p.to_string();
    const PhasePolynomial q = PhasePolynomial::parse(text, p.num_vars());
    EXPECT_EQ(p, q) << text;
    EXPECT_EQ(q.to_string(), text);
  }
}

TEST(PhasePolynomial, ProductEvaluatesAsProduct) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unif(-1.5, 1.5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const PhasePolynomial p = testing_util::random_polynomial(rng, n, 4, 5);
    const PhasePolynomial q = testing_util::random_polynomial(rng, n, 4, 5);
    const PhasePolynomial pq = p * q;
    if (!p.is_zero() && !q.is_zero()) EXPECT_EQ(pq.degree(), p.degree() + q.degree());
    for (int k = 0; k < 100; ++k) {
      std::vector<double> x(n);
      for (auto& v : x) v = unif(rng);
      const double want = testing_util::direct_sum(p, x) * testing_util::direct_sum(q, x);
      EXPECT_NEAR(pq.evaluate(x), want, 1e-10 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST(PhasePolynomial, EvaluateMatchesDirectSummation) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const PhasePolynomial p = testing_util::random_polynomial(rng, n, 4, 8);
    const NumericPolynomial fast(p);
    std::vector<double> x(n);
    for (auto& v : x) v = unif(rng);
    const double want = testing_util::direct_sum(p, x);
    const double scale = testing_util::abs_sum(p, x);
    EXPECT_NEAR(p.evaluate(x), want, 1e-12 * std::max(1.0, scale));
    EXPECT_NEAR(fast(x), want, 1e-12 * std::max(1.0, scale));
  }
}

TEST(PhasePolynomial, MixedPartialsCommute) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const PhasePolynomial p = testing_util::random_polynomial(rng, n, 4, 8);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(p.derivative(i).derivative(j), p.derivative(j).derivative(i));
  }
}

TEST(PhasePolynomial, NeverStoresZeroCoefficients) {
  PhasePolynomial p = P("x1^2 + x2", 2);
  p.add_term({2, 0}, Rational(-1));
  EXPECT_EQ(p.num_terms(), 1u);
  const PhasePolynomial prod = P("x1 + x2", 2) * P("x1 - x2", 2);
  for (const auto& [m, c] : prod.terms()) {
    EXPECT_NE(c, 0);
    EXPECT_EQ(m.size(), 2u);
  }
  EXPECT_EQ(PhasePolynomial(2).degree(), -1);
  EXPECT_EQ(P("x1^3*x2 + x2^2", 2).degree(), 4);
}

TEST(SymplecticStructure, SquaresToMinusIdentity) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const SymplecticStructure j(n);
    EXPECT_TRUE(j.squares_to_minus_identity());
    EXPECT_TRUE(j.is_antisymmetric());
    // Independent check of the block layout: J e_{n+k} = e_k.
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_EQ(j(k, n + k), Rational(1));
      EXPECT_EQ(j(n + k, k), Rational(-1));
    }
  }
}

}  // namespace
}  // namespace cvkvn
