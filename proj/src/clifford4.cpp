#include "quatsolve/clifford4.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "quatsolve/errors.hpp"
#include "quatsolve/realsys.hpp"

namespace quatsolve {

namespace {

constexpr unsigned kE23 = 0b1100U;
constexpr unsigned kE13 = 0b1010U;
constexpr unsigned kE12 = 0b0110U;

void require_vector(const Multivector& v, const char* who) {
  if (!v.is_pure_grade(1)) throw InvalidGrade(std::string(who) + ": argument is not a vector");
}

}  // namespace

double Multivector::max_abs() const {
  double r = 0.0;
  for (double c : coeff) r = std::fmax(r, std::fabs(c));
  return r;
}

bool Multivector::is_pure_grade(int k) const {
  for (unsigned mask = 0; mask < 16; ++mask)
    if (blade_grade(mask) != k && coeff[mask] != 0.0) return false;
  return true;
}

Multivector operator+(const Multivector& a, const Multivector& b) {
  Multivector r;
  for (std::size_t i = 0; i < 16; ++i) r.coeff[i] = a.coeff[i] + b.coeff[i];
  return r;
}

Multivector operator-(const Multivector& a, const Multivector& b) {
  Multivector r;
  for (std::size_t i = 0; i < 16; ++i) r.coeff[i] = a.coeff[i] - b.coeff[i];
  return r;
}

Multivector operator-(const Multivector& a) { return -1.0 * a; }

Multivector operator*(double s, const Multivector& a) {
  Multivector r;
  for (std::size_t i = 0; i < 16; ++i) r.coeff[i] = s * a.coeff[i];
  return r;
}

Multivector gp(const Multivector& a, const Multivector& b) {
  Multivector r;
  for (unsigned i = 0; i < 16; ++i) {
    if (a.coeff[i] == 0.0) continue;
    for (unsigned j = 0; j < 16; ++j) r.coeff[i ^ j] += blade_sign(i, j) * a.coeff[i] * b.coeff[j];
  }
  return r;
}

Multivector op(const Multivector& a, const Multivector& b) {
  Multivector r;
  for (unsigned i = 0; i < 16; ++i) {
    if (a.coeff[i] == 0.0) continue;
    for (unsigned j = 0; j < 16; ++j)
      if ((i & j) == 0U) r.coeff[i ^ j] += blade_sign(i, j) * a.coeff[i] * b.coeff[j];
  }
  return r;
}

Multivector grade(const Multivector& a, int k) {
  if (k < 0 || k > 4) throw InvalidGrade("grade " + std::to_string(k) + " outside 0..4");
  Multivector r;
  for (unsigned mask = 0; mask < 16; ++mask)
    if (blade_grade(mask) == k) r.coeff[mask] = a.coeff[mask];
  return r;
}

Multivector even_part(const Multivector& a) {
  Multivector r;
  for (unsigned mask = 0; mask < 16; ++mask)
    if (blade_grade(mask) % 2 == 0) r.coeff[mask] = a.coeff[mask];
  return r;
}

Multivector odd_part(const Multivector& a) { return a - even_part(a); }

Multivector reverse(const Multivector& a) {
  Multivector r;
  for (unsigned mask = 0; mask < 16; ++mask) {
    const int k = blade_grade(mask);
    r.coeff[mask] = ((k * (k - 1) / 2) % 2 != 0 ? -1.0 : 1.0) * a.coeff[mask];
  }
  return r;
}

Multivector cl_conj(const Multivector& a) {
  const Multivector e0 = Multivector::e(0);
  return gp(e0, gp(a, e0));
}

Multivector dual(const Multivector& a) { return gp(a, Multivector::pseudoscalar()); }

double bracket(const Multivector& x1, const Multivector& x2, const Multivector& x3, const Multivector& x4) {
  require_vector(x1, "bracket");
  require_vector(x2, "bracket");
  require_vector(x3, "bracket");
  require_vector(x4, "bracket");
  return dual(op(op(op(x1, x2), x3), x4)).coeff[0];
}

Multivector phi(const Quaternion& q) { return Multivector::vector(q.w, q.x, q.y, q.z); }

Quaternion phi_inv(const Multivector& v) {
  require_vector(v, "phi_inv");
  return {v.coeff[1], v.coeff[2], v.coeff[4], v.coeff[8]};
}

Quaternion pi(const Multivector& a) {
  const Multivector one_plus_e0 = Multivector::scalar(1.0) + Multivector::e(0);
  const Multivector one_minus_i4 = Multivector::scalar(1.0) - Multivector::pseudoscalar();
  const Multivector p = gp(gp(a, one_plus_e0), one_minus_i4);
  return {p.coeff[0], -p.coeff[kE23], p.coeff[kE13], -p.coeff[kE12]};
}

Multivector lift_residual(const LinearEquation& eq, const Quaternion& q) {
  if (eq.has_conjugate()) throw std::invalid_argument("lift_residual: conjugate terms not allowed");
  const Multivector qbar = cl_conj(phi(q));
  Multivector s = -phi(eq.rhs);
  for (const auto& t : eq.plain_terms) s = s + gp(gp(phi(t.c), qbar), phi(t.b));
  return gp(s, Multivector::scalar(1.0) + Multivector::pseudoscalar());
}

std::ostream& operator<<(std::ostream& os, const Multivector& a) {
  os << '[';
  for (std::size_t i = 0; i < 16; ++i) os << a.coeff[i] << (i < 15 ? ", " : "]");
  return os;
}

}  // namespace quatsolve
