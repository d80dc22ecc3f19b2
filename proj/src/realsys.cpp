#include "quatsolve/realsys.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "quatsolve/errors.hpp"

namespace quatsolve {

namespace {

void require_plain(const LinearEquation& eq, const char* who) {
  if (eq.has_conjugate()) throw std::invalid_argument(std::string(who) + ": conjugate terms not allowed");
}

// Determinant of the 3x3 minor left after deleting row `skip_row` and column `skip_col`.
double minor3(const Matrix4& m, int skip_row, int skip_col) {
  int r[3];
  int c[3];
  for (int i = 0, k = 0; i < 4; ++i)
    if (i != skip_row) r[k++] = i;
  for (int j = 0, k = 0; j < 4; ++j)
    if (j != skip_col) c[k++] = j;
  return m(r[0], c[0]) * (m(r[1], c[1]) * m(r[2], c[2]) - m(r[1], c[2]) * m(r[2], c[1])) -
         m(r[0], c[1]) * (m(r[1], c[0]) * m(r[2], c[2]) - m(r[1], c[2]) * m(r[2], c[0])) +
         m(r[0], c[2]) * (m(r[1], c[0]) * m(r[2], c[1]) - m(r[1], c[1]) * m(r[2], c[0]));
}

}  // namespace

Quaternion evaluate_lhs(const LinearEquation& eq, const Quaternion& q) {
  Quaternion s;
  for (const auto& t : eq.plain_terms) s += t.c * q * t.b;
  const Quaternion qc = conj(q);
  for (const auto& t : eq.conj_terms) s -= t.c * qc * t.b;
  return s;
}

double residual(const LinearEquation& eq, const Quaternion& q) { return max_abs(evaluate_lhs(eq, q) - eq.rhs); }

double coefficient_scale(const LinearEquation& eq) {
  double s = 0.0;
  for (const auto& t : eq.plain_terms) s += norm(t.c) * norm(t.b);
  for (const auto& t : eq.conj_terms) s += norm(t.c) * norm(t.b);
  return s;
}

double residual_scale(const LinearEquation& eq, const Quaternion& q) {
  return coefficient_scale(eq) * norm(q) + norm(eq.rhs);
}

SandwichOperator plain_operator(const std::vector<Term>& terms) {
  SandwichOperator op;
  op.reserve(terms.size());
  for (const auto& t : terms) op.push_back({t.c, t.b});
  return op;
}

SandwichOperator RevisedForm::as_operator() const {
  return {{a[0], Quaternion::one()}, {a[1], Quaternion::i()}, {a[2], Quaternion::j()}, {a[3], Quaternion::k()}};
}

RevisedForm revised_form(const LinearEquation& eq) {
  require_plain(eq, "revised_form");
  RevisedForm rf;
  for (const auto& t : eq.plain_terms)
    for (int l = 0; l < 4; ++l) rf.a[static_cast<std::size_t>(l)] += t.b[l] * t.c;
  return rf;
}

Matrix4 assemble_A(const LinearEquation& eq) {
  require_plain(eq, "assemble_A");
  return plain_operator(eq.plain_terms).to_matrix();
}

Matrix4 assemble_M(const LinearEquation& eq) {
  Matrix4 m;
  for (int l = 0; l < 4; ++l) m.set_column(l, evaluate_lhs(eq, Quaternion::basis(l)));
  return m;
}

Quaternion gauss_solve(const Matrix4& m, const Quaternion& d) {
  double a[4][5];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) a[i][j] = m(i, j);
    a[i][4] = d[i];
  }
  const double threshold = 1e-12 * m.max_abs();
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (!(std::fabs(a[piv][col]) > threshold)) throw SingularSystem("pivot below threshold in column " + std::to_string(col));
    if (piv != col)
      for (int j = 0; j < 5; ++j) std::swap(a[piv][j], a[col][j]);
    for (int r = col + 1; r < 4; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int j = col; j < 5; ++j) a[r][j] -= f * a[col][j];
    }
  }
  double x[4];
  for (int i = 3; i >= 0; --i) {
    double s = a[i][4];
    for (int j = i + 1; j < 4; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return {x[0], x[1], x[2], x[3]};
}

double det4(const Matrix4& m) {
  double s = 0.0;
  for (int j = 0; j < 4; ++j) s += ((j & 1) != 0 ? -1.0 : 1.0) * m(0, j) * minor3(m, 0, j);
  return s;
}

Matrix4 adjugate4(const Matrix4& m) {
  Matrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(j, i) = (((i + j) & 1) != 0 ? -1.0 : 1.0) * minor3(m, i, j);
  return r;
}

double det_formula(const RevisedForm& rf) {
  const auto& a = rf.a;
  double squares = 0.0;
  double trace = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    trace += dot(a[i], a[i]);
    for (std::size_t j = 0; j < 4; ++j) {
      const double g = dot(a[i], a[j]);
      squares += g * g;
    }
  }
  return 2.0 * squares - trace * trace - 8.0 * bracket4(a[0], a[1], a[2], a[3]);
}

SandwichOperator adj_formula(const RevisedForm& rf) {
  const auto& a = rf.a;
  double lambda = 0.0;
  for (const auto& al : a) lambda += norm_sq(al);
  auto weighted = [&](std::size_t i) {
    Quaternion s;
    for (std::size_t l = 0; l < 4; ++l) s += dot(a[i], a[l]) * conj(a[l]);
    return s;
  };
  auto part = [&](std::size_t i) { return 2.0 * weighted(i) - lambda * conj(a[i]); };

  const Quaternion p0 = 2.0 * conj_tri_dual(a[1], a[2], a[3]) + part(0);
  const Quaternion p1 = -(-2.0 * conj_tri_dual(a[0], a[2], a[3]) + part(1));
  const Quaternion p2 = -(2.0 * conj_tri_dual(a[0], a[1], a[3]) + part(2));
  const Quaternion p3 = -(-2.0 * conj_tri_dual(a[0], a[1], a[2]) + part(3));
  return {{p0, Quaternion::one()}, {p1, Quaternion::i()}, {p2, Quaternion::j()}, {p3, Quaternion::k()}};
}

}  // namespace quatsolve
