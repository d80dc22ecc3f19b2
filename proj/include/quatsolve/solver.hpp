#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "quatsolve/quaternion.hpp"
#include "quatsolve/realsys.hpp"
#include "quatsolve/sandwich.hpp"

namespace quatsolve {

enum class Method { ClosedForm, Oracle, Sylvester, TwoTerm };

std::string_view to_string(Method m);

/// How the Δ and Φ sums are evaluated.
///
/// Naive runs the full ordered index loops (quadruple for Δ, triple for Φ).
/// Symmetric restricts brackets and tri_duals to sorted index tuples and
/// folds the Gram-only parts into matrix products.
enum class Summation { Naive, Symmetric };

struct SolveOptions {
  /// Relative degeneracy threshold; |Δ| < tol * scale^4 is refused.
  double degeneracy_tol = 1e-10;
  Summation summation = Summation::Naive;
};

struct SolveReport {
  Quaternion q;
  double delta = 0.0;
  double det_a = 0.0;
  std::optional<double> det_m;
  /// Max-norm of LHS(q) - rhs, recomputed from the original equation.
  double residual = 0.0;
  Method method = Method::ClosedForm;
};

/// c q b = d.
SolveReport solve_two_term(const Quaternion& c, const Quaternion& b, const Quaternion& d);

/// s q + q t = u, by q = (s² + t t̄ + (t + t̄) s)^-1 (s u + u t̄).
SolveReport solve_sylvester(const Quaternion& s, const Quaternion& t, const Quaternion& u,
                            double degeneracy_tol = 1e-10);

struct SylvesterForm {
  Quaternion s;
  Quaternion t;
  Quaternion u;
};

/// c1 q b1 + c2 q b2 = d  ->  s q + q t = u with s = c2⁻¹c1, t = b2 b1⁻¹,
/// u = c2⁻¹ d b1⁻¹.
SylvesterForm reduce_three_term(const Quaternion& c1, const Quaternion& b1, const Quaternion& c2,
                                const Quaternion& b2, const Quaternion& d);

/// Δ = -3 det(A) of Σ c_p q b_p, from Gram tables and brackets of the c's and b's.
double delta(const std::vector<Term>& terms, Summation summation = Summation::Naive);

/// Φ v, where Φ = -3 adj(A).
Quaternion phi_apply(const std::vector<Term>& terms, const Quaternion& v,
                     Summation summation = Summation::Naive);

/// Φ as an explicit term list; compose(Φ, Σ(c_p|b_p)) = Δ (1|1).
SandwichOperator phi_as_operator(const std::vector<Term>& terms, Summation summation = Summation::Naive);

/// Closed form q = Φ d / Δ for an equation without conjugate terms.
SolveReport solve_general(const LinearEquation& eq, const SolveOptions& opts = {});

/// Closed form for equations with conjugate terms. Splits q = x0 + x, solves
/// the merged plain equation Σ c x b = d - x0 h, fixes x0 from Re(x) = 0.
/// Falls through to solve_general when there are no conjugate terms.
SolveReport solve_with_conjugate(const LinearEquation& eq, const SolveOptions& opts = {});

/// Gaussian elimination on assemble_M. Reports det(M) as det_a (and det_m
/// when conjugate terms are present), with delta = -3 det(M) for plain input.
SolveReport solve_oracle(const LinearEquation& eq);

/// Dispatches on the presence of conjugate terms.
inline SolveReport solve(const LinearEquation& eq, const SolveOptions& opts = {}) {
  return solve_with_conjugate(eq, opts);
}

/// h = Σ_plain c b - Σ_conj c b.
Quaternion conjugate_offset(const LinearEquation& eq);

/// Plain and conjugate terms merged into one list, in that order.
std::vector<Term> merged_terms(const LinearEquation& eq);

}  // namespace quatsolve
