#ifndef LPBP_RATIONAL_HPP
#define LPBP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpbp {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Exact conversion: every finite double is a dyadic rational.
inline Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rat_from_double: non-finite");
  if (x == 0.0) return Rat(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
  auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
  exp -= 53;
  Rat r(mant);
  if (exp >= 0) {
    r *= Rat(BigInt(1) << exp);
  } else {
    r /= Rat(BigInt(1) << -exp);
  }
  return r;
}

/// Parses a plain decimal literal ("-3", "1.25") exactly.
inline Rat rat_from_decimal(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rat_from_decimal: empty");
  std::size_t pos = 0;
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') { neg = s[pos] == '-'; ++pos; }
  std::string digits;
  std::size_t frac_len = 0;
  bool seen_dot = false, seen_digit = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("rat_from_decimal: bad literal '" + s + "'");
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_len;
    } else {
      throw std::invalid_argument("rat_from_decimal: bad literal '" + s + "'");
    }
  }
  if (!seen_digit) throw std::invalid_argument("rat_from_decimal: bad literal '" + s + "'");
  BigInt num(digits);
  BigInt den = 1;
  for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
  Rat r(num, den);
  return neg ? -r : r;
}

inline std::string rat_to_string(const Rat& r) {
  std::string n = boost::multiprecision::numerator(r).str();
  BigInt d = boost::multiprecision::denominator(r);
  if (d == 1) return n;
  return n + "/" + d.str();
}

inline double rat_to_double(const Rat& r) { return r.template convert_to<double>(); }

inline bool rat_is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

inline bool rat_is_01(const Rat& r) { return r == 0 || r == 1; }

inline bool rat_is_half_integral(const Rat& r) {
  return r == 0 || r == 1 || r == Rat(1, 2);
}

inline Rat rat_dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace lpbp

#endif
