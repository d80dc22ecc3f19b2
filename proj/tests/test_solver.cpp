#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quatsolve/errors.hpp"
#include "quatsolve/solver.hpp"
#include "support.hpp"

using namespace quatsolve;

namespace {

const Quaternion one = Quaternion::one();
const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();
const Quaternion K = Quaternion::k();

}  // namespace

TEST_CASE("two-term equations") {
  const Quaternion d{1, 2, 3, 4};
  CHECK(solve_two_term(one, one, d).q == d);
  const SolveReport r = solve_two_term(I, J, K);
  CHECK(r.q == (-1.0 * I) * K * (-1.0 * J));
  CHECK(r.residual == 0.0);
  CHECK(r.method == Method::TwoTerm);
  CHECK_THROWS_AS(solve_two_term(Quaternion{}, one, d), DegenerateInput);
}

TEST_CASE("sylvester") {
  CHECK(solve_sylvester(one, one, Quaternion(2.0)).q == one);
  CHECK_THROWS_AS(solve_sylvester(I, -1.0 * I, Quaternion{1, 2, 3, 4}), DegenerateInput);

  InstanceGenerator gen(83);
  for (int n = 0; n < 200; ++n) {
    const Quaternion s = gen.quaternion(), t = gen.quaternion(), u = gen.quaternion();
    const SolveReport r = solve_sylvester(s, t, u);
    CHECK(r.residual <= 1e-10 * residual_scale({{{s, one}, {one, t}}, {}, u}, r.q));
    const LinearEquation eq{{{s, one}, {one, t}}, {}, u};
    CHECK(rel_diff(r.q, gauss_solve(assemble_A(eq), u)) < 1e-9);
  }
}

TEST_CASE("three-term reduction") {
  const Quaternion s{1, 2, 0, 1}, t{0, 1, 1, 1}, d{3, 0, 0, 1};
  const SylvesterForm f = reduce_three_term(s, one, one, t, d);
  CHECK(f.s == s);
  CHECK(f.t == t);
  CHECK(f.u == d);
  CHECK_THROWS_AS(reduce_three_term(s, one, Quaternion{}, t, d), DegenerateInput);

  InstanceGenerator gen(89);
  for (int n = 0; n < 50; ++n) {
    const Quaternion c1 = gen.quaternion(), b1 = gen.quaternion(), c2 = gen.quaternion(), b2 = gen.quaternion();
    const Quaternion rhs = gen.quaternion();
    const SylvesterForm g = reduce_three_term(c1, b1, c2, b2, rhs);
    for (int l = 0; l < 4; ++l) {
      const Quaternion q = Quaternion::basis(l);
      // c2 (s q + q t - u) b1 = c1 q b1 + c2 q b2 - d
      const Quaternion lhs = c2 * (g.s * q + q * g.t - g.u) * b1;
      CHECK(max_abs(lhs - (c1 * q * b1 + c2 * q * b2 - rhs)) < 1e-13);
    }
  }
}

TEST_CASE("delta and phi on a single identity term") {
  const std::vector<Term> unit{{one, one}};
  CHECK(delta(unit) == doctest::Approx(-3.0));
  CHECK(delta(unit, Summation::Symmetric) == doctest::Approx(-3.0));
  const Quaternion v{1, -2, 3, 0.5};
  CHECK(rel_diff(phi_apply(unit, v), -3.0 * v) < 1e-15);
  CHECK(rel_diff(phi_as_operator(unit).to_matrix(), -3.0 * Matrix4::identity()) < 1e-15);
  const LinearEquation eq{unit, {}, v};
  CHECK(rel_diff(solve_general(eq).q, v) < 1e-15);
}

TEST_CASE("single-term delta") {
  InstanceGenerator gen(97);
  for (int n = 0; n < 100; ++n) {
    const Term t = gen.term();
    const LinearEquation eq{{t}, {}, one};
    const double expected = -3.0 * det4(assemble_A(eq));
    CHECK(rel_diff(delta(eq.plain_terms), expected) < 1e-12);
    CHECK(rel_diff(delta(eq.plain_terms), -3.0 * std::pow(norm_sq(t.c) * norm_sq(t.b), 2)) < 1e-12);
  }
}

TEST_CASE("phi is linear and matches its operator") {
  InstanceGenerator gen(101);
  for (int n = 0; n < 100; ++n) {
    const LinearEquation eq = gen.instance(1 + n % 8, 0).eq;
    const Quaternion v = gen.quaternion(), w = gen.quaternion();
    const Quaternion pv = phi_apply(eq.plain_terms, v);
    const double s = max_abs(pv) + max_abs(phi_apply(eq.plain_terms, w));
    CHECK(max_abs(phi_apply(eq.plain_terms, v + w) - pv - phi_apply(eq.plain_terms, w)) <= 1e-13 * s);
    CHECK(rel_diff(phi_as_operator(eq.plain_terms).apply(v), pv) < 1e-12);
    CHECK(rel_diff(phi_as_operator(eq.plain_terms, Summation::Symmetric).apply(v),
                   phi_apply(eq.plain_terms, v, Summation::Symmetric)) < 1e-12);
  }
}

TEST_CASE("closed form against the oracle") {
  InstanceGenerator gen(103);
  int solved = 0;
  for (int n = 0; n < 300; ++n) {
    const GeneratedInstance inst = gen.instance(2 + n % 8, 0);
    SolveReport closed;
    try {
      closed = solve_general(inst.eq);
    } catch (const DegenerateInput&) {
      continue;
    }
    ++solved;
    const SolveReport oracle = solve_oracle(inst.eq);
    CHECK(rel_diff(closed.q, oracle.q) < 1e-8);
    CHECK(closed.residual <= 1e-9 * residual_scale(inst.eq, closed.q));
    CHECK(rel_diff(closed.delta, oracle.delta) < 1e-9);
    CHECK(rel_diff(closed.delta, -3.0 * closed.det_a) < 1e-15);
  }
  CHECK(solved > 250);
}

TEST_CASE("closed form matches the sylvester route") {
  InstanceGenerator gen(107);
  for (int n = 0; n < 200; ++n) {
    const GeneratedInstance inst = gen.instance(2, 0);
    const auto& t = inst.eq.plain_terms;
    const SylvesterForm f = reduce_three_term(t[0].c, t[0].b, t[1].c, t[1].b, inst.eq.rhs);
    CHECK(rel_diff(solve_sylvester(f.s, f.t, f.u).q, solve_general(inst.eq).q) < 1e-9);
  }
  const LinearEquation degenerate{{{I, one}, {one, -1.0 * I}}, {}, Quaternion{1, 2, 3, 4}};
  CHECK_THROWS_AS(solve_general(degenerate), DegenerateInput);
}

TEST_CASE("degeneracy is reported with its determinants") {
  const LinearEquation zero{{{Quaternion{}, one}}, {}, one};
  CHECK_THROWS_AS(solve_general(zero), DegenerateInput);
  const LinearEquation syl{{{I, one}, {one, -1.0 * I}}, {}, one};
  try {
    solve_general(syl);
    FAIL("expected DegenerateInput");
  } catch (const DegenerateInput& e) {
    REQUIRE(e.delta().has_value());
    CHECK(std::fabs(*e.delta()) < 1e-12);
    REQUIRE(e.det_a().has_value());
  }
  CHECK_THROWS_AS(solve_oracle(syl), SingularSystem);
  CHECK_THROWS_AS(solve_general(LinearEquation{{}, {{one, one}}, one}), std::invalid_argument);
}

TEST_CASE("conjugate hand case") {
  const LinearEquation eq{{}, {{one, one}}, Quaternion{1, 1, 0, 0}};
  const SolveReport r = solve_with_conjugate(eq);
  CHECK(r.q == Quaternion{-1, 1, 0, 0});
  CHECK(r.delta == doctest::Approx(-3.0));
  REQUIRE(r.det_m.has_value());
  CHECK(*r.det_m == doctest::Approx(det4(assemble_M(eq))));
  CHECK(solve(eq).q == r.q);
}

TEST_CASE("conjugate equations against the oracle") {
  InstanceGenerator gen(109);
  int solved = 0;
  for (int n = 0; n < 300; ++n) {
    const GeneratedInstance inst = gen.instance(n % 6, 1 + n % 3);
    SolveReport closed;
    try {
      closed = solve_with_conjugate(inst.eq);
    } catch (const DegenerateInput&) {
      continue;
    }
    ++solved;
    const SolveReport oracle = solve_oracle(inst.eq);
    CHECK(rel_diff(closed.q, oracle.q) < 1e-8);
    CHECK(closed.residual <= 1e-9 * residual_scale(inst.eq, closed.q));
    CHECK(rel_diff(*closed.det_m, det4(assemble_M(inst.eq))) < 1e-9);
  }
  CHECK(solved > 250);
}

TEST_CASE("no conjugate terms falls through to the plain solver") {
  InstanceGenerator gen(113);
  const LinearEquation eq = gen.instance(4, 0).eq;
  const SolveReport a = solve_with_conjugate(eq);
  const SolveReport b = solve_general(eq);
  CHECK(a.q == b.q);
  CHECK(a.delta == b.delta);
  CHECK_FALSE(a.det_m.has_value());
}

TEST_CASE("scale covariance and unit conjugation") {
  InstanceGenerator gen(127);
  for (int n = 0; n < 100; ++n) {
    const LinearEquation eq = gen.instance(2 + n % 6, 0).eq;
    const Quaternion q = solve_general(eq).q;

    const double lambda = 0.25 + 3.0 * std::fabs(gen.uniform());
    LinearEquation scaled = eq;
    for (auto& t : scaled.plain_terms) t.c = lambda * t.c;
    scaled.rhs = lambda * scaled.rhs;
    CHECK(rel_diff(solve_general(scaled).q, q) < 1e-9);

    const Quaternion r0 = gen.quaternion();
    const Quaternion r = r0 / norm(r0);
    LinearEquation rotated = eq;
    for (auto& t : rotated.plain_terms) {
      t.c = r * t.c * conj(r);
      t.b = r * t.b * conj(r);
    }
    rotated.rhs = r * eq.rhs * conj(r);
    CHECK(rel_diff(solve_general(rotated).q, r * q * conj(r)) < 1e-9);
  }
}

TEST_CASE("naive and symmetric summation agree") {
  InstanceGenerator gen(131);
  for (int n = 0; n < 200; ++n) {
    const LinearEquation eq = gen.instance(1 + n % 9, 0).eq;
    const double dn = delta(eq.plain_terms, Summation::Naive);
    const double ds = delta(eq.plain_terms, Summation::Symmetric);
    CHECK(rel_diff(dn, ds) < 1e-11);
    const Quaternion v = gen.quaternion();
    CHECK(rel_diff(phi_apply(eq.plain_terms, v), phi_apply(eq.plain_terms, v, Summation::Symmetric)) < 1e-11);
  }
}

TEST_CASE("method names") {
  CHECK(to_string(Method::ClosedForm) == "closed_form");
  CHECK(to_string(Method::Oracle) == "oracle");
  CHECK(to_string(Method::Sylvester) == "sylvester");
  CHECK(to_string(Method::TwoTerm) == "two_term");
}
