#pragma once

#include <array>
#include <ostream>

#include "quatsolve/quaternion.hpp"

namespace quatsolve {

/// Dense 4x4 real matrix, row-major, rows and columns indexed over e0..e3.
struct Matrix4 {
  std::array<double, 16> m{};

  static constexpr Matrix4 zero() { return {}; }
  static constexpr Matrix4 identity() {
    Matrix4 r;
    for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
    return r;
  }
  static constexpr Matrix4 diagonal(double d0, double d1, double d2, double d3) {
    Matrix4 r;
    r(0, 0) = d0;
    r(1, 1) = d1;
    r(2, 2) = d2;
    r(3, 3) = d3;
    return r;
  }

  constexpr double& operator()(int row, int col) { return m[static_cast<std::size_t>(4 * row + col)]; }
  constexpr double operator()(int row, int col) const { return m[static_cast<std::size_t>(4 * row + col)]; }

  constexpr bool operator==(const Matrix4&) const = default;

  constexpr Matrix4 transpose() const {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  constexpr Quaternion column(int col) const { return {(*this)(0, col), (*this)(1, col), (*this)(2, col), (*this)(3, col)}; }
  constexpr void set_column(int col, const Quaternion& q) {
    (*this)(0, col) = q.w;
    (*this)(1, col) = q.x;
    (*this)(2, col) = q.y;
    (*this)(3, col) = q.z;
  }

  /// Largest absolute entry.
  double max_abs() const;
  /// Frobenius norm.
  double frobenius() const;
};

Matrix4 operator+(const Matrix4& a, const Matrix4& b);
Matrix4 operator-(const Matrix4& a, const Matrix4& b);
Matrix4 operator*(double s, const Matrix4& a);
Matrix4 operator*(const Matrix4& a, const Matrix4& b);

/// M·φ(q), read back as a quaternion.
Quaternion operator*(const Matrix4& a, const Quaternion& q);

/// Frobenius inner product, sum of a_ij * b_ij.
double frobenius_dot(const Matrix4& a, const Matrix4& b);

std::ostream& operator<<(std::ostream& os, const Matrix4& a);

}  // namespace quatsolve
