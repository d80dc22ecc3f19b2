#include "quatsolve/verify.hpp"

#include <algorithm>
#include <cmath>

#include "quatsolve/clifford4.hpp"
#include "quatsolve/compare.hpp"
#include "quatsolve/equation_io.hpp"
#include "quatsolve/errors.hpp"
#include "quatsolve/random.hpp"
#include "quatsolve/realsys.hpp"
#include "quatsolve/solver.hpp"

namespace quatsolve {

namespace {

Summary summarize(std::vector<double> v) {
  if (v.empty()) return {};
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  const double median = n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
  return {v.back(), median};
}

template <class Field>
Summary summarize_field(const std::vector<CaseRecord>& cases, Field field) {
  std::vector<double> v;
  for (const auto& c : cases)
    if (!c.degenerate) v.push_back(field(c));
  return summarize(std::move(v));
}

Quaternion clifford_tri_dual(const Quaternion& a1, const Quaternion& a2, const Quaternion& a3) {
  return phi_inv(dual(op(op(phi(a1), phi(a2)), phi(a3))));
}

class Checker {
 public:
  Checker(VerifyReport& report, std::uint64_t seed) : report_(report), seed_(seed) {}

  void check(const std::string& identity, double error) {
    const double tol = verify_tolerances().at(identity);
    ++report_.checks[identity];
    if (!(error <= tol)) report_.failures.push_back({seed_, identity, error, tol});
  }

 private:
  VerifyReport& report_;
  std::uint64_t seed_;
};

void algebra_checks(InstanceGenerator& gen, Checker& chk) {
  const Quaternion a1 = gen.quaternion();
  const Quaternion a2 = gen.quaternion();
  const Quaternion a3 = gen.quaternion();
  const Quaternion a4 = gen.quaternion();

  const double s3 = norm(a1) * norm(a2) * norm(a3);
  chk.check("tri_dual_clifford", scaled_diff(tri_dual(a1, a2, a3), clifford_tri_dual(a1, a2, a3), s3));
  chk.check("tri_dual_conjugate",
            scaled_diff(conj_tri_dual(a1, a2, a3), clifford_tri_dual(conj(a1), conj(a2), conj(a3)), s3));

  const double s4 = s3 * norm(a4);
  Matrix4 rows;
  const Quaternion qs[4] = {a1, a2, a3, a4};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) rows(r, c) = qs[r][c];
  const double b = bracket4(a1, a2, a3, a4);
  chk.check("bracket_clifford", scaled_diff(b, bracket(phi(a1), phi(a2), phi(a3), phi(a4)), s4));
  chk.check("bracket_determinant", scaled_diff(b, det4(rows), s4));

  chk.check("pi_homomorphism", scaled_diff(pi(gp(phi(a1), phi(a2))), a1 * conj(a2), norm(a1) * norm(a2)));
}

CaseRecord plain_case(std::uint64_t seed, int n, InstanceGenerator& gen, Checker& chk) {
  CaseRecord rec;
  rec.seed = seed;
  rec.n = n;
  const GeneratedInstance inst = gen.instance(n, 0);
  const LinearEquation& eq = inst.eq;
  const Matrix4 a = assemble_A(eq);
  const double det_a = det4(a);
  const Matrix4 adj = adjugate4(a);
  const double d_naive = delta(eq.plain_terms, Summation::Naive);
  const double d_sym = delta(eq.plain_terms, Summation::Symmetric);
  rec.delta = d_naive;
  rec.det_a = det_a;

  chk.check("delta_det", rel_diff(d_naive, -3.0 * det_a));
  chk.check("det_formula", rel_diff(det_formula(revised_form(eq)), det_a));
  chk.check("adj_formula", rel_diff(adj_formula(revised_form(eq)).to_matrix(), adj));
  const SandwichOperator phi_op = phi_as_operator(eq.plain_terms);
  chk.check("phi_adjugate", rel_diff(phi_op.to_matrix(), -3.0 * adj));
  chk.check("operator_identity",
            rel_diff(compose(phi_op, plain_operator(eq.plain_terms)).to_matrix(), d_naive * Matrix4::identity()));
  chk.check("summation_paths", std::max(rel_diff(d_naive, d_sym),
                                        rel_diff(phi_op.to_matrix(),
                                                 phi_as_operator(eq.plain_terms, Summation::Symmetric).to_matrix())));

  const Quaternion perturb = gen.quaternion();
  SolveReport closed;
  SolveReport oracle;
  try {
    closed = solve_general(eq);
    oracle = solve_oracle(eq);
  } catch (const DegenerateInput&) {
    rec.degenerate = true;
    return rec;
  } catch (const SingularSystem&) {
    rec.degenerate = true;
    return rec;
  }
  rec.discrepancy = rel_diff(closed.q, oracle.q);
  rec.residual_closed = closed.residual;
  rec.residual_oracle = oracle.residual;
  chk.check("oracle_equivalence", rec.discrepancy);
  chk.check("closed_residual", closed.residual / residual_scale(eq, closed.q));

  rec.lift_max = lift_residual(eq, oracle.q).max_abs();
  chk.check("lift_residual", rec.lift_max / residual_scale(eq, oracle.q));

  const Quaternion off = oracle.q + perturb;
  const Multivector lifted = lift_residual(eq, off);
  const Quaternion defect = evaluate_lhs(eq, off) - eq.rhs;
  chk.check("lift_projection", scaled_diff(0.5 * pi(lifted), defect, residual_scale(eq, off)));
  chk.check("lift_nonzero", lifted.max_abs() > 0.0 ? 0.0 : 1.0);
  return rec;
}

CaseRecord conjugate_case(std::uint64_t seed, int n_plain, int n_conj, InstanceGenerator& gen, Checker& chk) {
  CaseRecord rec;
  rec.seed = seed;
  rec.n = n_plain + n_conj;
  const GeneratedInstance inst = gen.instance(n_plain, n_conj);
  const LinearEquation& eq = inst.eq;
  const double det_m = det4(assemble_M(eq));
  SolveReport closed;
  SolveReport oracle;
  try {
    closed = solve_with_conjugate(eq);
    oracle = solve_oracle(eq);
  } catch (const DegenerateInput&) {
    rec.degenerate = true;
    return rec;
  } catch (const SingularSystem&) {
    rec.degenerate = true;
    return rec;
  }
  rec.delta = closed.delta;
  rec.det_a = closed.det_a;
  rec.det_m = closed.det_m;
  rec.discrepancy = rel_diff(closed.q, oracle.q);
  rec.residual_closed = closed.residual;
  rec.residual_oracle = oracle.residual;
  chk.check("conjugate_oracle", rec.discrepancy);
  chk.check("conjugate_residual", closed.residual / residual_scale(eq, closed.q));
  chk.check("conjugate_det_m", rel_diff(*closed.det_m, det_m));
  return rec;
}

void sylvester_case(InstanceGenerator& gen, Checker& chk) {
  const GeneratedInstance inst = gen.instance(2, 0);
  const auto& t = inst.eq.plain_terms;
  try {
    const SylvesterForm sf = reduce_three_term(t[0].c, t[0].b, t[1].c, t[1].b, inst.eq.rhs);
    const SolveReport syl = solve_sylvester(sf.s, sf.t, sf.u);
    const SolveReport gen_route = solve_general(inst.eq);
    chk.check("sylvester_route", rel_diff(syl.q, gen_route.q));
  } catch (const DegenerateInput&) {
  }
}

}  // namespace

const std::map<std::string, double>& verify_tolerances() {
  static const std::map<std::string, double> tol = {
      {"tri_dual_clifford", 1e-12},   {"tri_dual_conjugate", 1e-12}, {"bracket_clifford", 1e-12},
      {"bracket_determinant", 1e-12}, {"pi_homomorphism", 1e-12},    {"delta_det", 1e-9},
      {"det_formula", 1e-9},          {"adj_formula", 1e-8},         {"phi_adjugate", 1e-8},
      {"operator_identity", 1e-8},    {"summation_paths", 1e-11},    {"oracle_equivalence", 1e-8},
      {"closed_residual", 1e-9},      {"lift_residual", 1e-10},      {"lift_projection", 1e-10},
      {"lift_nonzero", 0.0},          {"sylvester_route", 1e-9},     {"conjugate_oracle", 1e-8},
      {"conjugate_residual", 1e-9},   {"conjugate_det_m", 1e-9},
  };
  return tol;
}

Summary VerifyReport::discrepancy() const {
  return summarize_field(cases, [](const CaseRecord& c) { return c.discrepancy; });
}
Summary VerifyReport::residual_closed() const {
  return summarize_field(cases, [](const CaseRecord& c) { return c.residual_closed; });
}
Summary VerifyReport::residual_oracle() const {
  return summarize_field(cases, [](const CaseRecord& c) { return c.residual_oracle; });
}
Summary VerifyReport::lift() const {
  return summarize_field(cases, [](const CaseRecord& c) { return c.lift_max; });
}

VerifyReport run_verify(const VerifyOptions& opts) {
  VerifyReport report;
  const int n_max = std::max(1, opts.n_max);
  for (int i = 0; i < opts.cases; ++i) {
    const std::uint64_t seed = opts.seed + static_cast<std::uint64_t>(i);
    InstanceGenerator gen(seed);
    Checker chk(report, seed);
    algebra_checks(gen, chk);
    report.cases.push_back(plain_case(seed, 1 + i % n_max, gen, chk));
    report.cases.push_back(conjugate_case(seed, i % n_max, 1 + i % 2, gen, chk));
    sylvester_case(gen, chk);
  }
  return report;
}

nlohmann::ordered_json to_json(const VerifyReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["ok"] = r.ok();
  ordered_json cases = ordered_json::array();
  for (const auto& c : r.cases) {
    ordered_json o;
    o["seed"] = c.seed;
    o["n"] = c.n;
    o["degenerate"] = c.degenerate;
    o["delta"] = c.delta;
    o["det_a"] = c.det_a;
    if (c.det_m) o["det_m"] = *c.det_m;
    o["discrepancy"] = c.discrepancy;
    o["residual_closed"] = c.residual_closed;
    o["residual_oracle"] = c.residual_oracle;
    o["lift_max"] = c.lift_max;
    cases.push_back(std::move(o));
  }
  j["cases"] = std::move(cases);
  auto summary = [](const Summary& s) { return ordered_json{{"max", s.max}, {"median", s.median}}; };
  j["aggregate"] = {{"discrepancy", summary(r.discrepancy())},
                    {"residual_closed", summary(r.residual_closed())},
                    {"residual_oracle", summary(r.residual_oracle())},
                    {"lift_max", summary(r.lift())}};
  ordered_json checks = ordered_json::object();
  for (const auto& [name, count] : r.checks) checks[name] = count;
  j["checks"] = std::move(checks);
  ordered_json failures = ordered_json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"seed", f.seed}, {"identity", f.identity}, {"error", f.error}, {"tolerance", f.tolerance}});
  j["failures"] = std::move(failures);
  return j;
}

}  // namespace quatsolve
