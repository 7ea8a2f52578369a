#ifndef LPBP_NOISE_HPP
#define LPBP_NOISE_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace lpbp {

/// Uniqueness-inducing perturbation. Noise is drawn per GM variable (per
/// copy, after duplication) as i.i.d. uniform in (0, magnitude], from a
/// fixed-algorithm generator so files replay identically everywhere.
struct NoiseSpec {
  std::uint64_t seed = 0;
  double magnitude = 0.0;  // 0 disables
};

inline std::vector<double> noise_vector(const NoiseSpec& spec, std::size_t count) {
  std::vector<double> out(count, 0.0);
  if (spec.magnitude <= 0.0) return out;
  std::mt19937_64 rng(spec.seed);
  for (auto& x : out) {
    // ((word >> 11) + 1) / 2^53 lies in (0, 1].
    double u = static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
    x = u * spec.magnitude;
  }
  return out;
}

/// Default magnitude: 1e-3 times the smallest positive gap between distinct
/// weights; falls back to the smallest positive weight, then to 1e-3.
inline double default_noise_magnitude(std::vector<double> weights) {
  std::sort(weights.begin(), weights.end());
  double gap = 0.0;
  for (std::size_t i = 1; i < weights.size(); ++i) {
    double d = weights[i] - weights[i - 1];
    if (d > 0.0 && (gap == 0.0 || d < gap)) gap = d;
  }
  if (gap > 0.0) return 1e-3 * gap;
  for (double w : weights)
    if (w > 0.0) return 1e-3 * w;
  return 1e-3;
}

}  // namespace lpbp

#endif
