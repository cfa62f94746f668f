// Copyright 2026 The rainbow-turan Authors
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

#ifndef RT_RATIONAL_HPP_
#define RT_RATIONAL_HPP_

#include <cstdint>
#include <charconv>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace rt {

using Rational = boost::rational<std::int64_t>;

inline Rational rat(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::int64_t floor(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline std::int64_t ceil(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

// Parses "p", "p/q" or "-p/q". Returns false on malformed text or a zero
// denominator.
inline bool try_parse_rational(std::string_view text, Rational& out) {
  auto number = [](std::string_view s, std::int64_t& v) {
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc() && end == s.data() + s.size() && !s.empty();
  };
  std::int64_t num = 0, den = 1;
  const auto slash = text.find('/');
  if (!number(text.substr(0, slash), num)) return false;
  if (slash != std::string_view::npos && !number(text.substr(slash + 1), den)) return false;
  if (den == 0) return false;
  out = Rational(num, den);
  return true;
}

// The degree threshold 9k/7 + 2 that drives the whole upper-bound argument.
inline Rational degree_threshold(int k) { return rat(9 * k, 7) + 2; }

}  // namespace rt

#endif  // RT_RATIONAL_HPP_
