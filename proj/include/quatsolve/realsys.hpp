#pragma once

#include <array>
#include <vector>

#include "quatsolve/matrix4.hpp"
#include "quatsolve/quaternion.hpp"
#include "quatsolve/sandwich.hpp"

namespace quatsolve {

/// One coefficient pair of a term c q b (or c q̄ b).
struct Term {
  Quaternion c;
  Quaternion b;

  bool operator==(const Term&) const = default;
};

/// Σ c_i q b_i - Σ c_r q̄ b_r = rhs.
///
/// Conjugate terms enter with a minus sign, so an equation holding a single
/// conjugate term (1, 1) reads -q̄ = rhs.
struct LinearEquation {
  std::vector<Term> plain_terms;
  std::vector<Term> conj_terms;
  Quaternion rhs;

  bool has_conjugate() const { return !conj_terms.empty(); }
  bool empty() const { return plain_terms.empty() && conj_terms.empty(); }
};

/// Left-hand side of the equation evaluated at q.
Quaternion evaluate_lhs(const LinearEquation& eq, const Quaternion& q);
/// Max-norm of evaluate_lhs(eq, q) - rhs.
double residual(const LinearEquation& eq, const Quaternion& q);

/// Σ |c| |b| over plain and conjugate terms; the unit in which coefficient
/// magnitudes are measured.
double coefficient_scale(const LinearEquation& eq);
/// Natural magnitude of the residual at q: coefficient_scale * |q| + |rhs|.
double residual_scale(const LinearEquation& eq, const Quaternion& q);

/// The operator Σ (c_p | b_p) over the plain terms.
SandwichOperator plain_operator(const std::vector<Term>& terms);

/// a0 q + a1 q i + a2 q j + a3 q k, the rewriting of Σ c_p q b_p with
/// a_l = Σ_p (b_p)_l c_p.
struct RevisedForm {
  std::array<Quaternion, 4> a{};

  SandwichOperator as_operator() const;
};

RevisedForm revised_form(const LinearEquation& eq);

/// Coefficient matrix of the plain equation. Built by applying the operator
/// to the basis quaternions. Throws std::invalid_argument on conjugate terms.
Matrix4 assemble_A(const LinearEquation& eq);
/// Coefficient matrix of the full equation, conjugate terms included.
Matrix4 assemble_M(const LinearEquation& eq);

/// Partial-pivot Gaussian elimination on M φ(q) = φ(d). Throws
/// SingularSystem when a pivot falls below 1e-12 times the largest initial
/// entry.
Quaternion gauss_solve(const Matrix4& m, const Quaternion& d);

/// Cofactor expansion. Total: defined for singular input.
double det4(const Matrix4& m);
Matrix4 adjugate4(const Matrix4& m);

/// det(A) of the revised form from inner products and one bracket:
///   2 Σ_ij (a_i·a_j)² - (Σ_i a_i·a_i)² - 8 [a0 a1 a2 a3].
double det_formula(const RevisedForm& rf);

/// adj(A) of the revised form as a four-term operator built from
/// Λ = Σ a_l ā_l, the weighted sums Σ_l (a_i·a_l) ā_l and the
/// conjugate-argument tri_duals.
SandwichOperator adj_formula(const RevisedForm& rf);

}  // namespace quatsolve
