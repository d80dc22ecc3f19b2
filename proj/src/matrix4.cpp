#include "quatsolve/matrix4.hpp"

#include <cmath>
#include <iomanip>

namespace quatsolve {

double Matrix4::max_abs() const {
  double r = 0.0;
  for (double v : m) r = std::fmax(r, std::fabs(v));
  return r;
}

double Matrix4::frobenius() const {
  double s = 0.0;
  for (double v : m) s += v * v;
  return std::sqrt(s);
}

Matrix4 operator+(const Matrix4& a, const Matrix4& b) {
  Matrix4 r;
  for (std::size_t i = 0; i < 16; ++i) r.m[i] = a.m[i] + b.m[i];
  return r;
}

Matrix4 operator-(const Matrix4& a, const Matrix4& b) {
  Matrix4 r;
  for (std::size_t i = 0; i < 16; ++i) r.m[i] = a.m[i] - b.m[i];
  return r;
}

Matrix4 operator*(double s, const Matrix4& a) {
  Matrix4 r;
  for (std::size_t i = 0; i < 16; ++i) r.m[i] = s * a.m[i];
  return r;
}

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
  Matrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

Quaternion operator*(const Matrix4& a, const Quaternion& q) {
  double out[4];
  for (int i = 0; i < 4; ++i) out[i] = a(i, 0) * q.w + a(i, 1) * q.x + a(i, 2) * q.y + a(i, 3) * q.z;
  return {out[0], out[1], out[2], out[3]};
}

double frobenius_dot(const Matrix4& a, const Matrix4& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < 16; ++i) s += a.m[i] * b.m[i];
  return s;
}

std::ostream& operator<<(std::ostream& os, const Matrix4& a) {
  for (int i = 0; i < 4; ++i) {
    os << (i == 0 ? "[[" : " [");
    for (int j = 0; j < 4; ++j) os << std::setw(12) << a(i, j) << (j < 3 ? ", " : "");
    os << (i == 3 ? "]]" : "],\n");
  }
  return os;
}

}  // namespace quatsolve
