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

#include "cvkvn/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cvkvn {

namespace {

using boost::multiprecision::cpp_int;

cpp_int pow10(int k) {
  cpp_int r = 1;
  for (int i = 0; i < k; ++i) r *= 10;
  return r;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Rational parse_decimal(const std::string& s) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
  cpp_int digits = 0;
  int frac_digits = 0;
  bool any = false, seen_point = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      if (seen_point) ++frac_digits;
      any = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any) throw std::invalid_argument("malformed number: '" + s + "'");
  int exponent = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) exp_negative = s[i++] == '-';
    if (i >= s.size()) throw std::invalid_argument("malformed exponent: '" + s + "'");
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("malformed exponent: '" + s + "'");
      exponent = exponent * 10 + (s[i] - '0');
      if (exponent > 400) throw std::invalid_argument("exponent out of range: '" + s + "'");
    }
    if (exp_negative) exponent = -exponent;
  }
  if (i != s.size()) throw std::invalid_argument("malformed number: '" + s + "'");
  int shift = exponent - frac_digits;
  Rational r = shift >= 0 ? Rational(digits * pow10(shift)) : Rational(digits, pow10(-shift));
  return negative ? Rational(-r) : r;
}

}  // namespace

std::string to_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  std::string s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string::npos) return parse_decimal(s);
  Rational num = parse_decimal(trim(std::string_view(s).substr(0, slash)));
  Rational den = parse_decimal(trim(std::string_view(s).substr(slash + 1)));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  return num / den;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational factorial(int k) {
  if (k < 0) throw std::invalid_argument("factorial of a negative number");
  cpp_int r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return Rational(r);
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  return factorial(n) / (factorial(k) * factorial(n - k));
}

}  // namespace cvkvn
