#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <ostream>

#include "quatsolve/quaternion.hpp"

namespace quatsolve {

struct LinearEquation;

/// Element of the Euclidean Clifford algebra over R^4.
///
/// coeff[mask] is the coefficient of the blade e_{i1} e_{i2} ... with
/// ascending indices i1 < i2 < ... taken from the set bits of mask. Bit l
/// stands for e_l, so mask 0b0011 is e0e1 and mask 15 is I4 = e0e1e2e3.
struct Multivector {
  std::array<double, 16> coeff{};

  static constexpr Multivector scalar(double s) {
    Multivector r;
    r.coeff[0] = s;
    return r;
  }
  static constexpr Multivector blade(unsigned mask, double s = 1.0) {
    Multivector r;
    r.coeff[mask & 15U] = s;
    return r;
  }
  static constexpr Multivector e(int l) { return blade(1U << l); }
  static constexpr Multivector pseudoscalar() { return blade(15U); }
  static constexpr Multivector vector(double v0, double v1, double v2, double v3) {
    Multivector r;
    r.coeff[1] = v0;
    r.coeff[2] = v1;
    r.coeff[4] = v2;
    r.coeff[8] = v3;
    return r;
  }

  constexpr double operator[](unsigned mask) const { return coeff[mask & 15U]; }
  constexpr bool operator==(const Multivector&) const = default;

  double max_abs() const;
  /// True when every coefficient outside grade k is exactly zero.
  bool is_pure_grade(int k) const;
};

constexpr int blade_grade(unsigned mask) { return std::popcount(mask & 15U); }

/// Sign of e_a e_b relative to the ascending blade e_{a^b} (unit metric).
constexpr double blade_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (a >>= 1; a != 0; a >>= 1) swaps += std::popcount(a & b);
  return (swaps & 1) != 0 ? -1.0 : 1.0;
}

Multivector operator+(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a);
Multivector operator*(double s, const Multivector& a);

/// Geometric product.
Multivector gp(const Multivector& a, const Multivector& b);
inline Multivector operator*(const Multivector& a, const Multivector& b) { return gp(a, b); }

/// Outer product: the blade pairs of gp whose grades add.
Multivector op(const Multivector& a, const Multivector& b);

/// Grade-k part. Throws InvalidGrade unless 0 <= k <= 4.
Multivector grade(const Multivector& a, int k);
Multivector even_part(const Multivector& a);
Multivector odd_part(const Multivector& a);

Multivector reverse(const Multivector& a);

/// e0 A e0.
Multivector cl_conj(const Multivector& a);

/// A I4.
Multivector dual(const Multivector& a);

/// The scalar [x1 x2 x3 x4] with x1∧x2∧x3∧x4 = [x1 x2 x3 x4] I4.
/// Throws InvalidGrade if any argument is not a pure vector.
double bracket(const Multivector& x1, const Multivector& x2, const Multivector& x3, const Multivector& x4);

/// 1, i, j, k -> e0, e1, e2, e3.
Multivector phi(const Quaternion& q);
/// Inverse of phi. Throws InvalidGrade on anything but a pure vector.
Quaternion phi_inv(const Multivector& v);

/// Projection onto the quaternions: (ι ∘ π_H)(A (1 + e0)(1 - I4)), where π_H
/// keeps the span of 1, e23, e13, e12 and ι sends them to 1, -i, j, -k.
Quaternion pi(const Multivector& a);

/// (Σ φ(c_i) conj(φ(q)) φ(b_i) - φ(d)) (1 + I4). Vanishes exactly when q
/// solves the plain equation. Throws std::invalid_argument on conjugate terms.
Multivector lift_residual(const LinearEquation& eq, const Quaternion& q);

std::ostream& operator<<(std::ostream& os, const Multivector& a);

}  // namespace quatsolve
