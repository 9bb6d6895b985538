// Copyright 2026 The Authors.
//
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

#ifndef STABLECOVER_RATIONAL_HPP_
#define STABLECOVER_RATIONAL_HPP_

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stablecover {

// All arithmetic in this library is exact. There is no floating point
// anywhere in the repository; every quantity that is not an integer is a
// reduced fraction with arbitrary-precision numerator and denominator.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

struct InvalidInput : std::runtime_error {
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

struct Unsupported : std::runtime_error {
  explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  return Rational(Integer(num), Integer(den));
}

// Prints "p/q", or just "p" when the reduced denominator is 1.
inline std::string format_rational(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += "/";
    s += denominator(q).str();
  }
  return s;
}

inline std::optional<Rational> try_parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Integer(std::string(text)));
    }
    const std::string num(text.substr(0, slash));
    const std::string den(text.substr(slash + 1));
    if (num.empty() || den.empty()) return std::nullopt;
    Integer d{den};
    if (d == 0) return std::nullopt;
    return Rational(Integer(num), d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline Rational parse_rational(std::string_view text) {
  auto q = try_parse_rational(text);
  if (!q) throw InvalidInput("cannot parse rational: '" + std::string(text) + "'");
  return *q;
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

}  // namespace stablecover

#endif  // STABLECOVER_RATIONAL_HPP_
