#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quatsolve/sandwich.hpp"
#include "support.hpp"

using namespace quatsolve;
using testing::frobenius_coordinate;
using testing::random_matrix;

TEST_CASE("identity operator") {
  CHECK(SandwichOperator::identity().to_matrix() == Matrix4::identity());
  CHECK(SandwichOperator{}.to_matrix() == Matrix4::zero());
  CHECK(SandwichOperator{}.apply(Quaternion{1, 2, 3, 4}) == Quaternion{});
}

TEST_CASE("left and right multiplication matrices") {
  const Quaternion p{1, 2, 3, 4};
  const double a = 1, b = 2, c = 3, d = 4;
  const Matrix4 left{{a, -b, -c, -d, b, a, -d, c, c, d, a, -b, d, -c, b, a}};
  const Matrix4 right{{a, -b, -c, -d, b, a, d, -c, c, -d, a, b, d, c, -b, a}};
  CHECK(left_matrix(p) == left);
  CHECK(right_matrix(p) == right);
  CHECK(det4(left) == doctest::Approx(norm_sq(p) * norm_sq(p)));
  CHECK(left_matrix(p) * right_matrix(p) == right_matrix(p) * left_matrix(p));
}

TEST_CASE("apply matches the matrix") {
  InstanceGenerator gen(3);
  for (int n = 0; n < 100; ++n) {
    SandwichOperator op;
    for (int t = 0; t < 1 + n % 5; ++t) op.push_back({gen.quaternion(), gen.quaternion()});
    const Quaternion q = gen.quaternion();
    CHECK(max_abs(op.to_matrix() * q - op(q)) < 1e-14);
  }
}

TEST_CASE("composition, transpose and sums") {
  InstanceGenerator gen(5);
  for (int n = 0; n < 100; ++n) {
    const SandwichOperator f{{gen.quaternion(), gen.quaternion()}, {gen.quaternion(), gen.quaternion()}};
    const SandwichOperator g{{gen.quaternion(), gen.quaternion()}};
    CHECK(rel_diff(compose(g, f).to_matrix(), g.to_matrix() * f.to_matrix()) < 1e-14);
    CHECK(rel_diff((f + g).to_matrix(), f.to_matrix() + g.to_matrix()) < 1e-15);
    CHECK(rel_diff((2.5 * f).to_matrix(), 2.5 * f.to_matrix()) < 1e-15);

    const SandwichTerm t = g.terms()[0];
    const SandwichOperator tc{{conj(t.left), conj(t.right)}};
    CHECK(rel_diff(g.to_matrix().transpose(), tc.to_matrix()) < 1e-15);
  }
}

TEST_CASE("from_matrix agrees with the Frobenius projection") {
  InstanceGenerator gen(17);
  for (int n = 0; n < 100; ++n) {
    const Matrix4 m = random_matrix(gen);
    const SandwichOperator op = from_matrix(m);
    REQUIRE(op.size() == 4);
    for (int l = 0; l < 4; ++l) {
      CHECK(op.terms()[static_cast<std::size_t>(l)].right == Quaternion::basis(l));
      for (int a = 0; a < 4; ++a)
        CHECK(op.terms()[static_cast<std::size_t>(l)].left[a] ==
              doctest::Approx(frobenius_coordinate(m, l, a)).epsilon(1e-13));
    }
  }
}

TEST_CASE("from_matrix round trip") {
  InstanceGenerator gen(19);
  for (int n = 0; n < 100; ++n) {
    const Matrix4 m = random_matrix(gen);
    CHECK((from_matrix(m).to_matrix() - m).max_abs() <= 1e-13);
  }
  // Every single basis operator comes back as itself.
  for (int a = 0; a < 4; ++a)
    for (int l = 0; l < 4; ++l) {
      const SandwichOperator op{{Quaternion::basis(a), Quaternion::basis(l)}};
      CHECK((op.compress().to_matrix() - op.to_matrix()).max_abs() <= 1e-15);
    }
}
