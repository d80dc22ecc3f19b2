#include "quatsolve/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "quatsolve/errors.hpp"
#include "quatsolve/random.hpp"
#include "quatsolve/solver.hpp"

namespace quatsolve {

namespace {

constexpr int kInnerLoops = 8;

// Draws until an instance is comfortably non-degenerate for every route.
LinearEquation bench_instance(std::uint64_t seed, int n) {
  for (std::uint64_t s = seed;; ++s) {
    InstanceGenerator gen(s);
    GeneratedInstance inst = gen.instance(n, 0);
    try {
      solve_general(inst.eq);
      solve_oracle(inst.eq);
      return inst.eq;
    } catch (const Error&) {
    }
  }
}

template <class Solve>
BenchRow measure(int n, const char* method, int reps, const LinearEquation& eq, Solve solve) {
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(reps));
  double residual_max = 0.0;
  volatile double sink = 0.0;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int k = 0; k < kInnerLoops; ++k) {
      const SolveReport rep = solve(eq);
      sink = sink + rep.q.w;
      residual_max = std::max(residual_max, rep.residual);
    }
    const auto t1 = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count() / kInnerLoops);
  }
  std::sort(samples.begin(), samples.end());
  const std::size_t m = samples.size();
  const double median = m == 0 ? 0.0 : (m % 2 == 1 ? samples[m / 2] : 0.5 * (samples[m / 2 - 1] + samples[m / 2]));
  return {n, method, median, residual_max};
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& opts) {
  std::vector<BenchRow> rows;
  const int n_top = std::max(opts.n_max, 3);
  const int reps = std::max(opts.reps, 1);
  SolveOptions naive;
  SolveOptions sym;
  sym.summation = Summation::Symmetric;
  for (int n = 1; n <= n_top; ++n) {
    const LinearEquation eq = bench_instance(opts.seed + static_cast<std::uint64_t>(n), n);
    rows.push_back(measure(n, "closed_naive", reps, eq, [&](const LinearEquation& e) { return solve_general(e, naive); }));
    rows.push_back(measure(n, "closed_sym", reps, eq, [&](const LinearEquation& e) { return solve_general(e, sym); }));
    rows.push_back(measure(n, "oracle", reps, eq, [](const LinearEquation& e) { return solve_oracle(e); }));
  }
  return rows;
}

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "n,method,median_ns,residual_max\n";
  const auto flags = os.flags();
  const auto prec = os.precision();
  os.precision(17);
  for (const auto& r : rows) os << r.n << ',' << r.method << ',' << r.median_ns << ',' << r.residual_max << '\n';
  os.flags(flags);
  os.precision(prec);
}

}  // namespace quatsolve
