#include "quatsolve/sandwich.hpp"

namespace quatsolve {

Quaternion SandwichOperator::apply(const Quaternion& q) const {
  Quaternion r;
  for (const auto& t : terms_) r += t.left * q * t.right;
  return r;
}

Matrix4 SandwichOperator::to_matrix() const {
  Matrix4 r;
  for (int l = 0; l < 4; ++l) r.set_column(l, apply(Quaternion::basis(l)));
  return r;
}

SandwichOperator SandwichOperator::compress() const { return from_matrix(to_matrix()); }

SandwichOperator compose(const SandwichOperator& g, const SandwichOperator& f) {
  std::vector<SandwichTerm> out;
  out.reserve(g.size() * f.size());
  for (const auto& tg : g.terms())
    for (const auto& tf : f.terms()) out.push_back({tg.left * tf.left, tf.right * tg.right});
  return SandwichOperator(std::move(out));
}

SandwichOperator operator+(const SandwichOperator& a, const SandwichOperator& b) {
  std::vector<SandwichTerm> out(a.terms());
  out.insert(out.end(), b.terms().begin(), b.terms().end());
  return SandwichOperator(std::move(out));
}

SandwichOperator operator*(double s, const SandwichOperator& a) {
  std::vector<SandwichTerm> out(a.terms());
  for (auto& t : out) t.left *= s;
  return SandwichOperator(std::move(out));
}

SandwichOperator from_matrix(const Matrix4& mm) {
  auto m = [&mm](int r, int c) { return mm(r, c); };
  const Quaternion p0{(m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3)),
                      -(m(0, 1) - m(1, 0) + m(2, 3) - m(3, 2)),
                      -(m(0, 2) - m(1, 3) - m(2, 0) + m(3, 1)),
                      -(m(0, 3) + m(1, 2) - m(2, 1) - m(3, 0))};
  const Quaternion p1{-(m(0, 1) - m(1, 0) - m(2, 3) + m(3, 2)),
                      -(m(0, 0) + m(1, 1) - m(2, 2) - m(3, 3)),
                      -(m(0, 3) + m(1, 2) + m(2, 1) + m(3, 0)),
                      (m(0, 2) - m(1, 3) + m(2, 0) - m(3, 1))};
  const Quaternion p2{-(m(0, 2) + m(1, 3) - m(2, 0) - m(3, 1)),
                      (m(0, 3) - m(1, 2) - m(2, 1) + m(3, 0)),
                      -(m(0, 0) - m(1, 1) + m(2, 2) - m(3, 3)),
                      -(m(0, 1) + m(1, 0) + m(2, 3) + m(3, 2))};
  const Quaternion p3{-(m(0, 3) - m(1, 2) + m(2, 1) - m(3, 0)),
                      -(m(0, 2) + m(1, 3) + m(2, 0) + m(3, 1)),
                      (m(0, 1) + m(1, 0) - m(2, 3) - m(3, 2)),
                      -(m(0, 0) - m(1, 1) - m(2, 2) + m(3, 3))};
  return {{0.25 * p0, Quaternion::one()},
          {0.25 * p1, Quaternion::i()},
          {0.25 * p2, Quaternion::j()},
          {0.25 * p3, Quaternion::k()}};
}

Matrix4 left_matrix(const Quaternion& p) { return SandwichOperator{{p, Quaternion::one()}}.to_matrix(); }

Matrix4 right_matrix(const Quaternion& p) { return SandwichOperator{{Quaternion::one(), p}}.to_matrix(); }

}  // namespace quatsolve
