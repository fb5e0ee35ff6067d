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

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace cvkvn {

using Rational = boost::multiprecision::cpp_rational;

/// Renders `p/q` in lowest terms, or `p` when the denominator is one.
std::string to_string(const Rational& r);

/// Accepts `p`, `-p`, `p/q` and finite decimals such as `0.25` or `-1.5e-2`.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

Rational factorial(int k);
Rational binomial(int n, int k);

}  // namespace cvkvn
