#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace quatsolve {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a closed form does not apply: a zero divisor quaternion, or a
/// determinant below the scale-relative threshold. Carries whatever
/// determinant information was available when the refusal happened.
class DegenerateInput : public Error {
 public:
  explicit DegenerateInput(const std::string& what,
                           std::optional<double> delta = std::nullopt,
                           std::optional<double> det_a = std::nullopt,
                           std::optional<double> det_m = std::nullopt)
      : Error(what), delta_(delta), det_a_(det_a), det_m_(det_m) {}

  std::optional<double> delta() const { return delta_; }
  std::optional<double> det_a() const { return det_a_; }
  std::optional<double> det_m() const { return det_m_; }

 private:
  std::optional<double> delta_;
  std::optional<double> det_a_;
  std::optional<double> det_m_;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

class InvalidGrade : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace quatsolve
