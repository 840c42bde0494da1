#include "icover/rational.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace icover {

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  num = g ? n / g : 0;
  den = g ? d / g : 1;
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

std::int64_t parse_int(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("sign without digits");
  std::int64_t v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("not an integer: " + std::string(s));
    if (v > (INT64_MAX - (s[i] - '0')) / 10)
      throw std::invalid_argument("integer out of range: " + std::string(s));
    v = v * 10 + (s[i] - '0');
  }
  return neg ? -v : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view frac = s.substr(dot + 1);
    if (frac.size() > 18) throw std::invalid_argument("too many decimal places: " + std::string(s));
    std::string digits(s.substr(0, dot));
    digits += frac;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("not a number: " + std::string(s));
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    return Rational(parse_int(digits), den);
  }
  return Rational(parse_int(s), 1);
}

std::int64_t floor_mul(const Rational& r, std::int64_t k) {
  const __int128 p = static_cast<__int128>(r.num) * k;
  const __int128 q = r.den;  // > 0
  __int128 f = p / q;
  if (p % q != 0 && p < 0) --f;
  return static_cast<std::int64_t>(f);
}

std::int64_t ceil_div_mul(std::int64_t a, const Rational& r, std::int64_t k) {
  // ceil(a*den / (num*k)) with num*k > 0.
  const __int128 numer = static_cast<__int128>(a) * r.den;
  const __int128 denom = static_cast<__int128>(r.num) * k;
  return static_cast<std::int64_t>((numer + denom - 1) / denom);
}

}  // namespace icover
