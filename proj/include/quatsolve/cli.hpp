#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "quatsolve/bench.hpp"
#include "quatsolve/verify.hpp"

namespace quatsolve::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kDegenerate = 2, kViolation = 3 };

struct SolveArgs {
  std::string input;
  std::string method = "closed";  // closed | oracle | both
  double tol = 1e-8;
  bool json = false;
  bool check_truth = false;
};

struct GenArgs {
  std::uint64_t seed = 1;
  int n = 3;
  int conj = 0;
  std::string out = "-";
};

struct VerifyArgs {
  VerifyOptions options;
  bool json = false;
};

struct BenchArgs {
  BenchOptions options;
  std::string csv = "-";
};

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);
int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

/// Full command line entry point; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quatsolve::cli
