// Copyright 2026 The jcontainers Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JC_RATIONAL_HPP_
#define JC_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jc {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "a/b", an integer, or a plain decimal such as "0.125" or "1e-3"
// exactly. Throws InputError on anything else.
Rational parse_rational(std::string_view text);

// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& x);

Rational pow(const Rational& base, long exponent);

// Exact value of a finite double (every double is a dyadic rational).
Rational from_double(double x);

inline double to_double(const Rational& x) { return x.get_d(); }

}  // namespace jc

#endif  // JC_RATIONAL_HPP_
