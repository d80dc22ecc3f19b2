#pragma once

#include <cstdint>
#include <random>

#include "quatsolve/quaternion.hpp"
#include "quatsolve/realsys.hpp"

namespace quatsolve {

struct GeneratedInstance {
  LinearEquation eq;
  Quaternion truth;
};

/// Seeded instance generator.
///
/// The stream is the 64-bit Mersenne Twister (MT19937-64) seeded with the
/// given value. Each draw takes one 64-bit output x and maps it to
/// 2 * (x >> 11) * 2^-53 - 1, uniform on [-1, 1). Quaternions consume four
/// draws in (w, x, y, z) order. An instance draws all plain terms (c then b),
/// then all conjugate terms, then the ground-truth solution; the right-hand
/// side is the left-hand side evaluated at that solution.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : engine_(seed) {}

  double uniform() {
    const std::uint64_t x = engine_();
    return 2.0 * static_cast<double>(x >> 11) * 0x1.0p-53 - 1.0;
  }

  Quaternion quaternion() {
    const double w = uniform();
    const double x = uniform();
    const double y = uniform();
    const double z = uniform();
    return {w, x, y, z};
  }

  Term term() {
    const Quaternion c = quaternion();
    return {c, quaternion()};
  }

  GeneratedInstance instance(int n_plain, int n_conj) {
    GeneratedInstance g;
    for (int i = 0; i < n_plain; ++i) g.eq.plain_terms.push_back(term());
    for (int i = 0; i < n_conj; ++i) g.eq.conj_terms.push_back(term());
    g.truth = quaternion();
    g.eq.rhs = evaluate_lhs(g.eq, g.truth);
    return g;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace quatsolve
