#include "quatsolve/quaternion.hpp"

#include "quatsolve/errors.hpp"

namespace quatsolve {

Quaternion inv(const Quaternion& q) {
  const double n = norm_sq(q);
  if (!(n > 0.0)) throw DegenerateInput("inverse of the zero quaternion");
  return conj(q) / n;
}

double bracket4(const Quaternion& a1, const Quaternion& a2, const Quaternion& a3, const Quaternion& a4) {
  const Quaternion b1 = conj(a1);
  const Quaternion b2 = conj(a2);
  const Quaternion b3 = conj(a3);
  const Quaternion b4 = conj(a4);
  const Quaternion sum = a1 * b2 * a3 * b4 + a4 * b3 * a2 * b1 - a4 * b1 * a2 * b3 - a3 * b2 * a1 * b4;
  return -0.25 * re(sum);
}

Quaternion tri_dual(const Quaternion& a1, const Quaternion& a2, const Quaternion& a3) {
  const Quaternion b2 = conj(a2);
  const Quaternion r = 0.5 * (a1 * b2 * a3 - a3 * b2 * a1);
#ifdef QUATSOLVE_MUTATE_TRI_DUAL
  // Mutation build only: verifies that the verify suite catches a sign error.
  return -r;
#else
  return r;
#endif
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '[' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ']';
}

}  // namespace quatsolve
