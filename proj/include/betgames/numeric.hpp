// Copyright 2026 The betgames Authors
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

#ifndef BETGAMES_NUMERIC_HPP
#define BETGAMES_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>

namespace betgames {

// Exact arithmetic used by the verification paths. The equilibrium and
// bet-payoff identities are equalities, so the default mode keeps them exact;
// the double instantiation exists for large randomized sweeps.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

namespace detail {

// cpp_int reads a leading 0 as an octal prefix; decimal literals must be
// normalized first.
inline BigInt parse_decimal_int(std::string s) {
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.erase(s.begin());
  }
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("malformed integer literal '" + s + "'");
  const auto first = s.find_first_not_of('0');
  s = first == std::string::npos ? "0" : s.substr(first);
  BigInt v(s);
  return negative ? BigInt(-v) : v;
}

inline Rational parse_rational(const std::string& text) {
  std::string s = text;
  // strip surrounding whitespace
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw std::invalid_argument("empty numeric literal");
  s = s.substr(b, e - b + 1);

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const BigInt num = parse_decimal_int(s.substr(0, slash));
    const BigInt den = parse_decimal_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find('E') == std::string::npos) {
    return Rational(parse_decimal_int(s));
  }

  // decimal literal, optionally with an exponent: [-]ddd[.ddd][e[-]ddd]
  bool negative = false;
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) negative = s[pos++] == '-';
  std::string digits;
  long frac_digits = 0;
  long exponent = 0;
  bool seen_dot = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("malformed numeric literal '" + text + "'");
      seen_dot = true;
    } else if (c == 'e' || c == 'E') {
      exponent = std::stol(s.substr(pos + 1));
      break;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_dot) ++frac_digits;
    } else {
      throw std::invalid_argument("malformed numeric literal '" + text + "'");
    }
  }
  if (digits.empty()) throw std::invalid_argument("malformed numeric literal '" + text + "'");
  Rational v{parse_decimal_int(digits)};
  long shift = exponent - frac_digits;
  BigInt pow10 = 1;
  for (long i = 0; i < std::labs(shift); ++i) pow10 *= 10;
  if (shift > 0) v *= pow10;
  if (shift < 0) v /= Rational(pow10);
  return negative ? Rational(-v) : v;
}

}  // namespace detail

template <class R>
struct numeric_traits;

template <>
struct numeric_traits<Rational> {
  static constexpr bool is_exact = true;
  static const char* mode_name() { return "rational"; }
  static Rational parse(const std::string& text) { return detail::parse_rational(text); }
  static std::string str(const Rational& v) {
    std::ostringstream os;
    os << v;
    return os.str();
  }
  static double to_double(const Rational& v) { return v.convert_to<double>(); }
  static Rational from_double(double v) { return Rational(v); }  // exact binary expansion
  static Rational from_ratio(long num, long den) { return Rational(num, den); }
  static Rational default_tolerance() { return Rational(0); }
  static Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }
  static bool finite(const Rational&) { return true; }
};

template <>
struct numeric_traits<double> {
  static constexpr bool is_exact = false;
  static const char* mode_name() { return "float"; }
  static double parse(const std::string& text) {
    if (const auto slash = text.find('/'); slash != std::string::npos) {
      return std::stod(text.substr(0, slash)) / std::stod(text.substr(slash + 1));
    }
    return std::stod(text);
  }
  static std::string str(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
  }
  static double to_double(double v) { return v; }
  static double from_double(double v) { return v; }
  static double from_ratio(long num, long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static double default_tolerance() { return 1e-9; }
  static double abs(double v) { return std::fabs(v); }
  static bool finite(double v) { return std::isfinite(v); }
};

}  // namespace betgames

#endif  // BETGAMES_NUMERIC_HPP
