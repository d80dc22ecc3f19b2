#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "quatsolve/matrix4.hpp"
#include "quatsolve/quaternion.hpp"

namespace quatsolve {

/// The linear map q -> left * q * right, written (left | right).
struct SandwichTerm {
  Quaternion left;
  Quaternion right;

  bool operator==(const SandwichTerm&) const = default;
};

/// A finite sum of sandwich terms. Every real-linear map on the quaternions
/// has such a form; the empty sum is the zero operator.
class SandwichOperator {
 public:
  SandwichOperator() = default;
  SandwichOperator(std::initializer_list<SandwichTerm> terms) : terms_(terms) {}
  explicit SandwichOperator(std::vector<SandwichTerm> terms) : terms_(std::move(terms)) {}

  static SandwichOperator identity() { return {{Quaternion::one(), Quaternion::one()}}; }

  const std::vector<SandwichTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void push_back(const SandwichTerm& t) { terms_.push_back(t); }
  void reserve(std::size_t n) { terms_.reserve(n); }

  /// Sum of left_t * q * right_t over all terms.
  Quaternion apply(const Quaternion& q) const;
  Quaternion operator()(const Quaternion& q) const { return apply(q); }

  /// Column l is φ(apply(basis_l)).
  Matrix4 to_matrix() const;

  /// The canonical four-term form (p0|1) + (p1|i) + (p2|j) + (p3|k) of the
  /// same map. Term lists may differ from the original; actions agree.
  SandwichOperator compress() const;

 private:
  std::vector<SandwichTerm> terms_;
};

/// (u1|v1)(u2|v2) = (u1 u2 | v2 v1), extended bilinearly: g after f.
/// Returns g.size() * f.size() terms without simplification.
SandwichOperator compose(const SandwichOperator& g, const SandwichOperator& f);

/// Concatenation of term lists (operator sum).
SandwichOperator operator+(const SandwichOperator& a, const SandwichOperator& b);
/// Scales every left factor by s.
SandwichOperator operator*(double s, const SandwichOperator& a);

inline Matrix4 to_matrix(const SandwichOperator& op) { return op.to_matrix(); }

/// Four-term operator (p0|1) + (p1|i) + (p2|j) + (p3|k) whose matrix is M.
///
/// With M = (m_ij), 4 p0 = (m00+m11+m22+m33) - (m01-m10+m23-m32) i
/// - (m02-m13-m20+m31) j - (m03+m12-m21-m30) k, and analogously for p1..p3.
SandwichOperator from_matrix(const Matrix4& m);

/// Matrix of the left multiplication q -> p q.
Matrix4 left_matrix(const Quaternion& p);
/// Matrix of the right multiplication q -> q p.
Matrix4 right_matrix(const Quaternion& p);

}  // namespace quatsolve
