#pragma once

#include <cmath>
#include <ostream>

namespace quatsolve {

/// A real quaternion w + x i + y j + z k.
///
/// Plain value type. No operation normalizes or canonicalizes implicitly.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
  // Real quaternions convert implicitly so that `2.0 * q + 1.0` reads naturally.
  constexpr Quaternion(double real) : w(real) {}  // NOLINT(google-explicit-constructor)

  static constexpr Quaternion one() { return {1, 0, 0, 0}; }
  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }
  /// Basis element 0..3 over (1, i, j, k).
  static constexpr Quaternion basis(int l) {
    return {l == 0 ? 1.0 : 0.0, l == 1 ? 1.0 : 0.0, l == 2 ? 1.0 : 0.0, l == 3 ? 1.0 : 0.0};
  }

  constexpr double operator[](int l) const { return l == 0 ? w : l == 1 ? x : l == 2 ? y : z; }

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }
constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }
constexpr Quaternion operator/(const Quaternion& q, double s) { return {q.w / s, q.x / s, q.y / s, q.z / s}; }

// Hamilton product: i^2 = j^2 = k^2 = ijk = -1.
constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return mul(a, b); }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double re(const Quaternion& q) { return q.w; }
constexpr Quaternion im(const Quaternion& q) { return {0.0, q.x, q.y, q.z}; }
constexpr double norm_sq(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }
inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }
inline double max_abs(const Quaternion& q) {
  return std::fmax(std::fmax(std::fabs(q.w), std::fabs(q.x)), std::fmax(std::fabs(q.y), std::fabs(q.z)));
}

/// conj(q) / norm_sq(q). Throws DegenerateInput on the zero quaternion.
Quaternion inv(const Quaternion& q);

/// Euclidean inner product of the coordinate vectors; equals re(a * conj(b)).
constexpr double dot(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Determinant of the 4x4 matrix whose rows are the coordinates of a1..a4,
/// evaluated from quaternion products only:
///   -1/4 Re(a1 ā2 a3 ā4 + a4 ā3 a2 ā1 - a4 ā1 a2 ā3 - a3 ā2 a1 ā4).
double bracket4(const Quaternion& a1, const Quaternion& a2, const Quaternion& a3, const Quaternion& a4);

/// (a1 ā2 a3 - a3 ā2 a1) / 2, the quaternion image of the dual of the
/// trivector a1∧a2∧a3, with pseudoscalar e0 e1 e2 e3. tri_dual(i, j, k) = 1.
///
/// The conjugate-argument companion satisfies
/// tri_dual(ā1, ā2, ā3) = -conj(tri_dual(a1, a2, a3)); see conj_tri_dual.
Quaternion tri_dual(const Quaternion& a1, const Quaternion& a2, const Quaternion& a3);

inline Quaternion conj_tri_dual(const Quaternion& a1, const Quaternion& a2, const Quaternion& a3) {
  return -conj(tri_dual(a1, a2, a3));
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace quatsolve
