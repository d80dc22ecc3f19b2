#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace quatsolve {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int cases = 100;
  /// Largest term count; case i uses 1 + i % n_max plain terms.
  int n_max = 8;
};

/// One failed identity, reproducible from (seed, identity).
struct IdentityFailure {
  std::uint64_t seed = 0;
  std::string identity;
  double error = 0.0;
  double tolerance = 0.0;
};

struct CaseRecord {
  std::uint64_t seed = 0;
  int n = 0;
  bool degenerate = false;
  double delta = 0.0;
  double det_a = 0.0;
  std::optional<double> det_m;
  double discrepancy = 0.0;
  double residual_closed = 0.0;
  double residual_oracle = 0.0;
  double lift_max = 0.0;
};

struct Summary {
  double max = 0.0;
  double median = 0.0;
};

struct VerifyReport {
  std::vector<CaseRecord> cases;
  std::vector<IdentityFailure> failures;
  /// Identity name -> number of evaluations.
  std::map<std::string, int> checks;

  bool ok() const { return failures.empty(); }
  Summary discrepancy() const;
  Summary residual_closed() const;
  Summary residual_oracle() const;
  Summary lift() const;
};

/// Tolerance attached to each identity in the verify suite.
const std::map<std::string, double>& verify_tolerances();

/// Runs the full identity suite on `cases` seeded instances. Case i draws
/// from seed + i. Every number in the report is recomputed per case.
VerifyReport run_verify(const VerifyOptions& opts);

nlohmann::ordered_json to_json(const VerifyReport& r);

}  // namespace quatsolve
