#include "quatsolve/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "quatsolve/compare.hpp"
#include "quatsolve/equation_io.hpp"
#include "quatsolve/errors.hpp"
#include "quatsolve/random.hpp"
#include "quatsolve/solver.hpp"

namespace quatsolve::cli {

using nlohmann::ordered_json;

namespace {

std::string fmt_quaternion(const Quaternion& q) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << q + Quaternion{};
  return os.str();
}

std::string fmt_real(double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return os.str();
}

void print_report(const SolveReport& rep, std::optional<double> discrepancy, bool json, std::ostream& out) {
  if (json) {
    ordered_json j;
    j["q"] = quaternion_to_json(rep.q);
    j["delta"] = rep.delta;
    j["det_a"] = rep.det_a;
    if (rep.det_m) j["det_m"] = *rep.det_m;
    j["residual"] = rep.residual;
    j["method"] = std::string(to_string(rep.method));
    if (discrepancy) j["discrepancy"] = *discrepancy;
    out << j.dump() << '\n';
    return;
  }
  out << "q = " << fmt_quaternion(rep.q) << '\n';
  out << "delta = " << fmt_real(rep.delta) << '\n';
  out << "det_a = " << fmt_real(rep.det_a) << '\n';
  if (rep.det_m) out << "det_m = " << fmt_real(*rep.det_m) << '\n';
  out << "residual = " << fmt_real(rep.residual) << '\n';
  out << "method = " << to_string(rep.method) << '\n';
  if (discrepancy) out << "discrepancy = " << fmt_real(*discrepancy) << '\n';
}

}  // namespace

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  if (args.method != "closed" && args.method != "oracle" && args.method != "both") {
    err << "error: --method must be closed, oracle or both\n";
    return kFailure;
  }
  EquationFile file;
  try {
    file = read_equation_file(args.input);
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << '\n';
    return kFailure;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }

  SolveReport rep;
  std::optional<double> discrepancy;
  try {
    if (args.method == "oracle") {
      rep = solve_oracle(file.eq);
    } else {
      rep = solve(file.eq);
      if (args.method == "both") {
        const SolveReport oracle = solve_oracle(file.eq);
        discrepancy = rel_diff(rep.q, oracle.q);
      }
    }
  } catch (const DegenerateInput& e) {
    err << "degenerate: " << e.what();
    if (e.delta()) err << " (delta = " << fmt_real(*e.delta()) << ')';
    if (e.det_m()) err << " (det_m = " << fmt_real(*e.det_m()) << ')';
    err << '\n';
    return kDegenerate;
  } catch (const SingularSystem& e) {
    err << "degenerate: " << e.what() << '\n';
    return kDegenerate;
  }

  print_report(rep, discrepancy, args.json, out);
  if (discrepancy && !(*discrepancy <= args.tol)) {
    err << "error: closed form and oracle disagree: " << fmt_real(*discrepancy) << " > " << fmt_real(args.tol) << '\n';
    return kViolation;
  }
  if (args.check_truth) {
    if (!file.truth) {
      err << "error: --check-truth given but the file has no \"truth\" field\n";
      return kFailure;
    }
    const double d = rel_diff(rep.q, *file.truth);
    if (!(d <= args.tol)) {
      err << "error: solution differs from truth: " << fmt_real(d) << " > " << fmt_real(args.tol) << '\n';
      return kViolation;
    }
  }
  return kOk;
}

int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  if (args.n < 0 || args.conj < 0 || args.n + args.conj < 1) {
    err << "error: need --n >= 0, --conj >= 0 and at least one term\n";
    return kFailure;
  }
  InstanceGenerator gen(args.seed);
  const GeneratedInstance inst = gen.instance(args.n, args.conj);
  const std::string text = dump_equation({inst.eq, inst.truth});
  if (args.out == "-") {
    out << text;
    return kOk;
  }
  std::ofstream f(args.out, std::ios::binary);
  if (!(f << text)) {
    err << "error: cannot write " << args.out << '\n';
    return kFailure;
  }
  return kOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  if (args.options.cases < 0 || args.options.n_max < 1) {
    err << "error: need --cases >= 0 and --n-max >= 1\n";
    return kFailure;
  }
  const VerifyReport report = run_verify(args.options);
  if (args.json) {
    out << to_json(report).dump() << '\n';
  } else {
    std::size_t degenerate = 0;
    for (const auto& c : report.cases) degenerate += c.degenerate ? 1 : 0;
    out << "instances: " << report.cases.size() << " (" << degenerate << " degenerate, skipped)\n";
    for (const auto& [name, count] : report.checks) out << "check " << name << ": " << count << '\n';
    auto line = [&](const char* name, const Summary& s) {
      out << name << ": max " << fmt_real(s.max) << ", median " << fmt_real(s.median) << '\n';
    };
    line("discrepancy", report.discrepancy());
    line("residual_closed", report.residual_closed());
    line("residual_oracle", report.residual_oracle());
    line("lift_max", report.lift());
  }
  for (const auto& f : report.failures)
    err << "FAIL seed=" << f.seed << " identity=" << f.identity << " error=" << fmt_real(f.error)
        << " tolerance=" << fmt_real(f.tolerance) << '\n';
  return report.ok() ? kOk : kViolation;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  if (args.options.n_max < 1 || args.options.reps < 1) {
    err << "error: need --n-max >= 1 and --reps >= 1\n";
    return kFailure;
  }
  std::ofstream file;
  if (args.csv != "-") {
    file.open(args.csv);
    if (!file) {
      err << "error: cannot write " << args.csv << '\n';
      return kFailure;
    }
  }
  const auto rows = run_bench(args.options);
  std::ostream& sink = args.csv == "-" ? out : file;
  write_csv(sink, rows);
  if (!sink) {
    err << "error: write failed for " << args.csv << '\n';
    return kFailure;
  }
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form solver for linear quaternionic equations", "quatsolve"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an equation file");
  solve_cmd->add_option("input", solve_args.input, "Equation JSON file")->required();
  solve_cmd->add_option("--method", solve_args.method, "closed, oracle or both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}));
  solve_cmd->add_option("--tol", solve_args.tol, "Agreement tolerance for --method both and --check-truth");
  solve_cmd->add_flag("--json", solve_args.json, "Emit one JSON object");
  solve_cmd->add_flag("--check-truth", solve_args.check_truth, "Compare against the file's \"truth\" field");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random equation with known solution");
  gen_cmd->add_option("--seed", gen_args.seed, "Generator seed");
  gen_cmd->add_option("--n", gen_args.n, "Plain term count");
  gen_cmd->add_option("--conj", gen_args.conj, "Conjugate term count");
  gen_cmd->add_option("--out", gen_args.out, "Output path, - for stdout");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check closed form, oracle and Clifford lift");
  verify_cmd->add_option("--seed", verify_args.options.seed, "Base seed");
  verify_cmd->add_option("--cases", verify_args.options.cases, "Number of cases");
  verify_cmd->add_option("--n-max", verify_args.options.n_max, "Largest term count");
  verify_cmd->add_flag("--json", verify_args.json, "Emit one JSON object");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Time closed form against elimination");
  bench_cmd->add_option("--n-max", bench_args.options.n_max, "Largest term count");
  bench_cmd->add_option("--reps", bench_args.options.reps, "Repetitions per size and method");
  bench_cmd->add_option("--seed", bench_args.options.seed, "Instance seed");
  bench_cmd->add_option("--csv", bench_args.csv, "CSV output path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFailure;
  }

  if (*solve_cmd) return cmd_solve(solve_args, out, err);
  if (*gen_cmd) return cmd_gen(gen_args, out, err);
  if (*verify_cmd) return cmd_verify(verify_args, out, err);
  return cmd_bench(bench_args, out, err);
}

}  // namespace quatsolve::cli
