#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "quatsolve/clifford4.hpp"
#include "quatsolve/errors.hpp"
#include "quatsolve/realsys.hpp"

namespace quatsolve {

class IoError : public Error {
 public:
  using Error::Error;
};

/// On-disk equation:
///   { "terms": [{"c": [w,x,y,z], "b": [w,x,y,z]}, ...],
///     "conj_terms": [...],      // optional
///     "rhs": [w,x,y,z],
///     "truth": [w,x,y,z] }      // optional ground truth
struct EquationFile {
  LinearEquation eq;
  std::optional<Quaternion> truth;
};

nlohmann::ordered_json quaternion_to_json(const Quaternion& q);
/// Throws SchemaError unless j is an array of exactly four numbers.
Quaternion quaternion_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::ordered_json multivector_to_json(const Multivector& m);

nlohmann::ordered_json to_json(const EquationFile& f);
/// Throws SchemaError on any schema violation, including an equation with
/// no terms at all.
EquationFile equation_from_json(const nlohmann::json& j);

/// Throws IoError when the file cannot be read or is not JSON.
EquationFile read_equation_file(const std::filesystem::path& path);
/// Deterministic serialization (fixed key order, shortest round-trip doubles).
std::string dump_equation(const EquationFile& f);

}  // namespace quatsolve
