#pragma once

#include <cstdint>
#include <vector>

#include "quatsolve/clifford4.hpp"
#include "quatsolve/compare.hpp"
#include "quatsolve/matrix4.hpp"
#include "quatsolve/quaternion.hpp"
#include "quatsolve/random.hpp"
#include "quatsolve/realsys.hpp"
#include "quatsolve/sandwich.hpp"

namespace quatsolve::testing {

inline Matrix4 random_matrix(InstanceGenerator& gen) {
  Matrix4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = gen.uniform();
  return m;
}

inline Multivector random_multivector(InstanceGenerator& gen) {
  Multivector a;
  for (double& c : a.coeff) c = gen.uniform();
  return a;
}

inline Multivector random_vector(InstanceGenerator& gen) {
  return Multivector::vector(gen.uniform(), gen.uniform(), gen.uniform(), gen.uniform());
}

// Projection of m onto the (e_a | e_l) basis operator under the Frobenius
// inner product. The 16 basis operators are orthogonal with squared norm 4.
inline double frobenius_coordinate(const Matrix4& m, int l, int a) {
  const Matrix4 basis = left_matrix(Quaternion::basis(a)) * right_matrix(Quaternion::basis(l));
  return frobenius_dot(m, basis) / 4.0;
}

inline Matrix4 coordinate_rows(const Quaternion& a0, const Quaternion& a1, const Quaternion& a2,
                               const Quaternion& a3) {
  Matrix4 m;
  const Quaternion q[4] = {a0, a1, a2, a3};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = q[r][c];
  return m;
}

}  // namespace quatsolve::testing
