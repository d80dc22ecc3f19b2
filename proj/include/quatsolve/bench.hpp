#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace quatsolve {

struct BenchOptions {
  /// Term counts 1..max(n_max, 3) are measured.
  int n_max = 8;
  int reps = 21;
  std::uint64_t seed = 1;
};

struct BenchRow {
  int n = 0;
  std::string method;  // closed_naive, closed_sym or oracle
  double median_ns = 0.0;
  double residual_max = 0.0;
};

std::vector<BenchRow> run_bench(const BenchOptions& opts);

/// Header `n,method,median_ns,residual_max`, one line per row.
void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace quatsolve
