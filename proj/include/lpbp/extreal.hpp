#ifndef LPBP_EXTREAL_HPP
#define LPBP_EXTREAL_HPP

#include <cassert>
#include <cmath>
#include <limits>

namespace lpbp {

/// Extended real used for log-domain message values.
///
/// Values are finite doubles or the ±infinity sentinels; NaN never appears.
/// Addition absorbs into -infinity: (+inf) + (-inf) == -inf, so an infeasible
/// branch can never win a maximization. Differences of equal infinities are
/// defined as 0 (no information), which keeps message updates NaN-free.
struct ExtReal {
  double v = 0.0;

  static constexpr double kInf = std::numeric_limits<double>::infinity();

  constexpr ExtReal() = default;
  constexpr explicit ExtReal(double x) : v(x) { }

  static constexpr ExtReal neg_inf() { return ExtReal(-kInf); }
  static constexpr ExtReal pos_inf() { return ExtReal(kInf); }

  bool is_finite() const { return std::isfinite(v); }
  bool is_neg_inf() const { return v == -kInf; }
  bool is_pos_inf() const { return v == kInf; }

  friend bool operator==(ExtReal a, ExtReal b) { return a.v == b.v; }
  friend bool operator<(ExtReal a, ExtReal b) { return a.v < b.v; }
  friend bool operator>(ExtReal a, ExtReal b) { return a.v > b.v; }
  friend bool operator<=(ExtReal a, ExtReal b) { return a.v <= b.v; }
  friend bool operator>=(ExtReal a, ExtReal b) { return a.v >= b.v; }

  // -inf absorbs +inf.
  friend ExtReal operator+(ExtReal a, ExtReal b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    if (a.is_pos_inf() || b.is_pos_inf()) return pos_inf();
    return ExtReal(a.v + b.v);
  }

  ExtReal& operator+=(ExtReal o) { *this = *this + o; return *this; }
};

/// a - b with the convention that equal infinities cancel to 0.
/// Used for message differences M(1) - M(0).
inline ExtReal ext_diff(ExtReal a, ExtReal b) {
  if (!a.is_finite() || !b.is_finite()) {
    if (a.v == b.v) return ExtReal(0.0);
    if (a.is_neg_inf() || b.is_pos_inf()) return ExtReal::neg_inf();
    return ExtReal::pos_inf();
  }
  return ExtReal(a.v - b.v);
}

/// Residual distance: equal infinities contribute 0, a finite value against
/// an infinity (or opposite infinities) contributes +inf.
inline double ext_dist(ExtReal a, ExtReal b) {
  if (!a.is_finite() || !b.is_finite()) return a.v == b.v ? 0.0 : ExtReal::kInf;
  return std::fabs(a.v - b.v);
}

/// Left-to-right sum with the -inf-absorbing rule. The iteration order is the
/// summation order, which callers rely on for bitwise reproducibility.
template <typename It>
ExtReal ext_sum(It first, It last) {
  bool saw_pos = false;
  double acc = 0.0;
  for (It it = first; it != last; ++it) {
    ExtReal x = *it;
    if (x.is_neg_inf()) return ExtReal::neg_inf();
    if (x.is_pos_inf()) { saw_pos = true; continue; }
    acc += x.v;
  }
  return saw_pos ? ExtReal::pos_inf() : ExtReal(acc);
}

}  // namespace lpbp

#endif
