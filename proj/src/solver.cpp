#include "quatsolve/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "quatsolve/errors.hpp"

namespace quatsolve {

namespace {

// Symmetric n x n table of pairwise inner products.
class Gram {
 public:
  template <class Get>
  Gram(const std::vector<Term>& terms, Get get) : n_(terms.size()), g_(n_ * n_) {
    for (std::size_t p = 0; p < n_; ++p)
      for (std::size_t q = 0; q < n_; ++q) g_[p * n_ + q] = dot(get(terms[p]), get(terms[q]));
  }
  double operator()(std::size_t p, std::size_t q) const { return g_[p * n_ + q]; }

 private:
  std::size_t n_;
  std::vector<double> g_;
};

struct Tables {
  explicit Tables(const std::vector<Term>& terms)
      : n(terms.size()),
        gc(terms, [](const Term& t) { return t.c; }),
        gb(terms, [](const Term& t) { return t.b; }) {}

  // Σ_pq Gc_pq Gb_pq
  double frobenius() const {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) s += gc(p, q) * gb(p, q);
    return s;
  }

  // (Gc Gb)_pq
  std::vector<double> product() const {
    std::vector<double> w(n * n, 0.0);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r) s += gc(p, r) * gb(r, q);
        w[p * n + q] = s;
      }
    return w;
  }

  std::size_t n;
  Gram gc;
  Gram gb;
};

double delta_naive(const std::vector<Term>& t) {
  const Tables tab(t);
  const std::size_t n = tab.n;
  const auto& gc = tab.gc;
  const auto& gb = tab.gb;
  double d = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          d += bracket4(t[p].c, t[q].c, t[r].c, t[s].c) * bracket4(t[p].b, t[q].b, t[r].b, t[s].b) +
               3.0 * gc(p, q) * gc(r, s) * gb(p, q) * gb(r, s) -
               6.0 * gc(p, q) * gc(r, s) * gb(q, s) * gb(p, r);
        }
  return d;
}

// Brackets are alternating, so the ordered sum is 24 times the sum over
// p < q < r < s. The Gram parts are 3 <Gc, Gb>^2 - 6 tr((Gc Gb)^2).
double delta_symmetric(const std::vector<Term>& t) {
  const Tables tab(t);
  const std::size_t n = tab.n;
  double brackets = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      for (std::size_t r = q + 1; r < n; ++r)
        for (std::size_t s = r + 1; s < n; ++s)
          brackets += bracket4(t[p].c, t[q].c, t[r].c, t[s].c) * bracket4(t[p].b, t[q].b, t[r].b, t[s].b);
  const double f = tab.frobenius();
  const auto w = tab.product();
  double trace = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) trace += w[p * n + q] * w[q * n + p];
  return 24.0 * brackets + 3.0 * f * f - 6.0 * trace;
}

// Visits every (left, right) pair of Φ with its real weight.
template <class Visit>
void for_each_phi_term(const std::vector<Term>& t, Summation summation, Visit&& visit) {
  const Tables tab(t);
  const std::size_t n = tab.n;
  const auto& gc = tab.gc;
  const auto& gb = tab.gb;
  if (summation == Summation::Naive) {
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t r = 0; r < n; ++r) {
          visit(1.0, conj_tri_dual(t[p].c, t[q].c, t[r].c), conj_tri_dual(t[p].b, t[q].b, t[r].b));
          visit(3.0 * gc(p, r) * gb(p, r), conj(t[q].c), conj(t[q].b));
          visit(-6.0 * gc(p, r) * gb(q, r), conj(t[q].c), conj(t[p].b));
        }
    return;
  }
  // tri_dual is alternating in both factors, so each sorted triple stands
  // for 6 ordered ones with the permutation signs cancelling.
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      for (std::size_t r = q + 1; r < n; ++r)
        visit(6.0, conj_tri_dual(t[p].c, t[q].c, t[r].c), conj_tri_dual(t[p].b, t[q].b, t[r].b));
  const double f = tab.frobenius();
  for (std::size_t q = 0; q < n; ++q) visit(3.0 * f, conj(t[q].c), conj(t[q].b));
  const auto w = tab.product();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) visit(-6.0 * w[p * n + q], conj(t[q].c), conj(t[p].b));
}

void require_plain(const LinearEquation& eq, const char* who) {
  if (eq.has_conjugate()) throw std::invalid_argument(std::string(who) + ": conjugate terms not allowed");
  if (eq.empty()) throw std::invalid_argument(std::string(who) + ": equation has no terms");
}

SolveReport finish(const LinearEquation& eq, const Quaternion& q, double d, Method m) {
  SolveReport rep;
  rep.q = q;
  rep.delta = d;
  rep.det_a = -d / 3.0;
  rep.residual = residual(eq, q);
  rep.method = m;
  return rep;
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::ClosedForm:
      return "closed_form";
    case Method::Oracle:
      return "oracle";
    case Method::Sylvester:
      return "sylvester";
    case Method::TwoTerm:
      return "two_term";
  }
  return "unknown";
}

SolveReport solve_two_term(const Quaternion& c, const Quaternion& b, const Quaternion& d) {
  if (!(norm_sq(c) > 0.0) || !(norm_sq(b) > 0.0)) throw DegenerateInput("two-term equation with a zero coefficient");
  const LinearEquation eq{{{c, b}}, {}, d};
  return finish(eq, inv(c) * d * inv(b), delta(eq.plain_terms), Method::TwoTerm);
}

SolveReport solve_sylvester(const Quaternion& s, const Quaternion& t, const Quaternion& u, double degeneracy_tol) {
  const Quaternion tb = conj(t);
  const Quaternion den = s * s + t * tb + (t + tb) * s;
  const LinearEquation eq{{{s, Quaternion::one()}, {Quaternion::one(), t}}, {}, u};
  const double scale = norm(s) + norm(t);
  if (!(norm(den) > degeneracy_tol * scale * scale))
    throw DegenerateInput("Sylvester denominator s^2 + t t̄ + (t + t̄) s vanishes", delta(eq.plain_terms));
  // den is a real combination of 1, s and s^2, so it commutes with s.
  return finish(eq, inv(den) * (s * u + u * tb), delta(eq.plain_terms), Method::Sylvester);
}

SylvesterForm reduce_three_term(const Quaternion& c1, const Quaternion& b1, const Quaternion& c2,
                                const Quaternion& b2, const Quaternion& d) {
  if (!(norm_sq(c2) > 0.0) || !(norm_sq(b1) > 0.0))
    throw DegenerateInput("three-term reduction needs c2 != 0 and b1 != 0");
  const Quaternion c2i = inv(c2);
  const Quaternion b1i = inv(b1);
  return {c2i * c1, b2 * b1i, c2i * d * b1i};
}

double delta(const std::vector<Term>& terms, Summation summation) {
  return summation == Summation::Naive ? delta_naive(terms) : delta_symmetric(terms);
}

Quaternion phi_apply(const std::vector<Term>& terms, const Quaternion& v, Summation summation) {
  Quaternion r;
  for_each_phi_term(terms, summation, [&](double w, const Quaternion& l, const Quaternion& rt) {
    if (w != 0.0) r += w * (l * v * rt);
  });
  return r;
}

SandwichOperator phi_as_operator(const std::vector<Term>& terms, Summation summation) {
  SandwichOperator op;
  for_each_phi_term(terms, summation,
                    [&](double w, const Quaternion& l, const Quaternion& rt) { op.push_back({w * l, rt}); });
  return op;
}

SolveReport solve_general(const LinearEquation& eq, const SolveOptions& opts) {
  require_plain(eq, "solve_general");
  const double d = delta(eq.plain_terms, opts.summation);
  const double scale = coefficient_scale(eq);
  if (!(std::fabs(d) > opts.degeneracy_tol * std::pow(scale, 4)))
    throw DegenerateInput("delta below the degeneracy threshold", d, -d / 3.0);
  return finish(eq, phi_apply(eq.plain_terms, eq.rhs, opts.summation) / d, d, Method::ClosedForm);
}

SolveReport solve_with_conjugate(const LinearEquation& eq, const SolveOptions& opts) {
  if (!eq.has_conjugate()) return solve_general(eq, opts);
  const std::vector<Term> terms = merged_terms(eq);
  const Quaternion h = conjugate_offset(eq);
  const double scale = coefficient_scale(eq);

  const double d = delta(terms, opts.summation);
  if (!(std::fabs(d) > opts.degeneracy_tol * std::pow(scale, 4)))
    throw DegenerateInput("delta below the degeneracy threshold", d, -d / 3.0);

  const Quaternion phi_d = phi_apply(terms, eq.rhs, opts.summation);
  const Quaternion phi_h = phi_apply(terms, h, opts.summation);
  const double re_phi_h = re(phi_h);
  const double det_m = -re_phi_h / 3.0;
  if (!(std::fabs(re_phi_h) > opts.degeneracy_tol * std::pow(scale, 3) * norm(h)) || norm(h) == 0.0)
    throw DegenerateInput("Re(phi h) below the degeneracy threshold", d, -d / 3.0, det_m);

  const double x0 = re(phi_d) / re_phi_h;
  const Quaternion x = (phi_d - x0 * phi_h) / d;
  SolveReport rep = finish(eq, Quaternion(x0) + x, d, Method::ClosedForm);
  rep.det_m = det_m;
  return rep;
}

SolveReport solve_oracle(const LinearEquation& eq) {
  if (eq.empty()) throw std::invalid_argument("solve_oracle: equation has no terms");
  const Matrix4 m = assemble_M(eq);
  const Quaternion q = gauss_solve(m, eq.rhs);
  const double det_a = eq.has_conjugate() ? det4(plain_operator(merged_terms(eq)).to_matrix()) : det4(m);
  SolveReport rep = finish(eq, q, -3.0 * det_a, Method::Oracle);
  if (eq.has_conjugate()) rep.det_m = det4(m);
  return rep;
}

Quaternion conjugate_offset(const LinearEquation& eq) {
  Quaternion h;
  for (const auto& t : eq.plain_terms) h += t.c * t.b;
  for (const auto& t : eq.conj_terms) h -= t.c * t.b;
  return h;
}

std::vector<Term> merged_terms(const LinearEquation& eq) {
  std::vector<Term> all(eq.plain_terms);
  all.insert(all.end(), eq.conj_terms.begin(), eq.conj_terms.end());
  return all;
}

}  // namespace quatsolve
