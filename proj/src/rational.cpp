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

#include "jc/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "jc/error.hpp"

namespace jc {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Rational parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw InputError("not a number: '" + std::string(whole) + "'");
  }
  Integer z(std::string(s), 10);
  return Rational(negative ? Integer(-z) : z);
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  long exponent = 0;
  const auto e_pos = s.find_first_of("eE");
  if (e_pos != std::string_view::npos) {
    std::string_view exp_part = s.substr(e_pos + 1);
    const Rational e = parse_integer(exp_part, whole);
    if (!mpz_fits_slong_p(e.get_num_mpz_t()) ||
        std::abs(e.get_num().get_si()) > 4000) {
      throw InputError("exponent out of range: '" + std::string(whole) + "'");
    }
    exponent = e.get_num().get_si();
    s = s.substr(0, e_pos);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto dot = s.find('.');
  std::string digits(s.substr(0, dot));
  if (dot != std::string_view::npos) {
    std::string_view frac = s.substr(dot + 1);
    digits += frac;
    exponent -= static_cast<long>(frac.size());
  }
  if (!all_digits(digits)) {
    throw InputError("not a number: '" + std::string(whole) + "'");
  }
  Rational x{Integer(digits, 10)};
  x *= pow(Rational(10), exponent);
  return negative ? Rational(-x) : x;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw InputError("empty number");
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const Rational num = parse_integer(text.substr(0, slash), text);
    const Rational den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
    Rational q = num / den;
    q.canonicalize();
    return q;
  }
  if (text.find_first_of(".eE") != std::string_view::npos) {
    return parse_decimal(text, text);
  }
  return parse_integer(text, text);
}

std::string to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_str();
}

Rational pow(const Rational& base, long exponent) {
  Rational result = 1;
  if (exponent < 0) {
    if (base == 0) throw InputError("zero to a negative power");
    return 1 / pow(base, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(),
             static_cast<unsigned long>(exponent));
  result = Rational(num, den);
  result.canonicalize();
  return result;
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw InputError("non-finite value");
  return Rational(x);
}

}  // namespace jc
