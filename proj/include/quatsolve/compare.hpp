#pragma once

#include <algorithm>
#include <cmath>

#include "quatsolve/clifford4.hpp"
#include "quatsolve/matrix4.hpp"
#include "quatsolve/quaternion.hpp"

namespace quatsolve {

// Relative differences: |a - b| / max(|a|, |b|), zero when both vanish.
// Max-norms throughout.

inline double rel_diff(double a, double b) {
  const double m = std::max(std::fabs(a), std::fabs(b));
  return m == 0.0 ? 0.0 : std::fabs(a - b) / m;
}

inline double rel_diff(const Quaternion& a, const Quaternion& b) {
  const double m = std::max(max_abs(a), max_abs(b));
  return m == 0.0 ? 0.0 : max_abs(a - b) / m;
}

inline double rel_diff(const Matrix4& a, const Matrix4& b) {
  const double m = std::max(a.max_abs(), b.max_abs());
  return m == 0.0 ? 0.0 : (a - b).max_abs() / m;
}

/// |a - b| measured against an externally supplied magnitude.
inline double scaled_diff(double a, double b, double scale) { return std::fabs(a - b) / scale; }
inline double scaled_diff(const Quaternion& a, const Quaternion& b, double scale) { return max_abs(a - b) / scale; }

}  // namespace quatsolve
