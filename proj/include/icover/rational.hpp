#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace icover {

// Exact fraction over 64-bit integers, always stored reduced with a positive
// denominator, so equality is member-wise comparison.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);  // reduces; d must be nonzero

  friend bool operator==(const Rational&, const Rational&) = default;

  // Renders "7/9"; integral values render without the denominator.
  std::string str() const;
};

bool operator<(const Rational& a, const Rational& b);
inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
inline bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

// Accepts "p/q", a plain integer, or a decimal such as "0.5".
// Throws std::invalid_argument on anything else (including q == 0).
Rational parse_rational(std::string_view text);

// floor(r * k), exact.
std::int64_t floor_mul(const Rational& r, std::int64_t k);

// ceil(a / (r * k)), exact; requires r > 0, k > 0, a >= 0.
std::int64_t ceil_div_mul(std::int64_t a, const Rational& r, std::int64_t k);

}  // namespace icover
