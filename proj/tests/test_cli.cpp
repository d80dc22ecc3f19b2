#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "quatsolve/bench.hpp"
#include "quatsolve/cli.hpp"
#include "quatsolve/equation_io.hpp"
#include "quatsolve/errors.hpp"

using namespace quatsolve;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "quatsolve");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("quatsolve_test_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("schema") {
  const auto j = nlohmann::json::parse(R"({"terms":[{"c":[1,0,0,0],"b":[1,0,0,0]}],"rhs":[2,0,0,0]})");
  const EquationFile f = equation_from_json(j);
  CHECK(f.eq.plain_terms.size() == 1);
  CHECK(f.eq.conj_terms.empty());
  CHECK(f.eq.rhs == Quaternion(2.0));
  CHECK_FALSE(f.truth.has_value());

  CHECK_THROWS_AS(equation_from_json(nlohmann::json::parse(R"({"terms":[],"rhs":[1,0,0,0]})")), SchemaError);
  CHECK_THROWS_AS(equation_from_json(nlohmann::json::parse(R"({"terms":[{"c":[1,0,0],"b":[1,0,0,0]}],"rhs":[1,0,0,0]})")),
                  SchemaError);
  CHECK_THROWS_AS(equation_from_json(nlohmann::json::parse(R"({"terms":[{"c":[1,0,0,0]}],"rhs":[1,0,0,0]})")),
                  SchemaError);
  CHECK_THROWS_AS(equation_from_json(nlohmann::json::parse(R"({"terms":[{"c":[1,0,0,0],"b":[1,0,0,0]}]})")),
                  SchemaError);
  CHECK_THROWS_AS(equation_from_json(nlohmann::json::parse(R"({"terms":[{"c":["x",0,0,0],"b":[1,0,0,0]}],"rhs":[1,0,0,0]})")),
                  SchemaError);
  CHECK_THROWS_AS(read_equation_file("/nonexistent/equation.json"), IoError);
}

TEST_CASE("solve q + q = 2") {
  TempDir dir;
  const std::string path =
      dir.write("eq.json", R"({"terms":[{"c":[1,0,0,0],"b":[1,0,0,0]},{"c":[1,0,0,0],"b":[1,0,0,0]}],"rhs":[2,0,0,0]})");
  const Result r = run_cli({"solve", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("q = [1, 0, 0, 0]") != std::string::npos);
  CHECK(r.out.find("residual = 0\n") != std::string::npos);

  const Result j = run_cli({"solve", path, "--json", "--method", "both"});
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["q"] == nlohmann::json::parse("[1.0,0.0,0.0,0.0]"));
  CHECK(doc.contains("discrepancy"));
}

TEST_CASE("solve the conjugate hand case") {
  TempDir dir;
  const std::string path = dir.write("eq.json", R"({"conj_terms":[{"c":[1,0,0,0],"b":[1,0,0,0]}],"rhs":[1,1,0,0]})");
  for (const char* method : {"closed", "oracle", "both"}) {
    const Result r = run_cli({"solve", path, "--method", method});
    CHECK(r.code == 0);
    CHECK(r.out.find("q = [-1, 1, 0, 0]") != std::string::npos);
    CHECK(r.out.find("det_m = ") != std::string::npos);
  }
}

TEST_CASE("solve exit codes") {
  TempDir dir;
  const std::string empty = dir.write("empty.json", R"({"terms":[],"rhs":[1,0,0,0]})");
  const Result r = run_cli({"solve", empty});
  CHECK(r.code == 1);
  CHECK(r.err.find("schema") != std::string::npos);

  CHECK(run_cli({"solve", (dir / "missing.json").string()}).code == 1);
  CHECK(run_cli({"solve", dir.write("bad.json", "{not json")}).code == 1);

  const std::string degenerate = dir.write(
      "deg.json", R"({"terms":[{"c":[0,1,0,0],"b":[1,0,0,0]},{"c":[1,0,0,0],"b":[0,-1,0,0]}],"rhs":[1,2,3,4]})");
  for (const char* method : {"closed", "oracle", "both"}) {
    const Result d = run_cli({"solve", degenerate, "--method", method});
    CHECK(d.code == 2);
    CHECK(d.err.find("degenerate") != std::string::npos);
  }
  CHECK(run_cli({"solve", empty, "--method", "nope"}).code != 0);
}

TEST_CASE("gen is deterministic and solvable") {
  TempDir dir;
  const std::string a = (dir / "a.json").string();
  const std::string b = (dir / "b.json").string();
  REQUIRE(run_cli({"gen", "--seed", "42", "--n", "4", "--conj", "1", "--out", a}).code == 0);
  REQUIRE(run_cli({"gen", "--seed", "42", "--n", "4", "--conj", "1", "--out", b}).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a) != run_cli({"gen", "--seed", "43", "--n", "4", "--conj", "1"}).out);

  const auto doc = nlohmann::json::parse(slurp(a));
  CHECK(doc["terms"].size() == 4);
  CHECK(doc["conj_terms"].size() == 1);
  CHECK(doc.contains("truth"));

  for (const char* method : {"closed", "oracle", "both"})
    CHECK(run_cli({"solve", a, "--method", method, "--check-truth"}).code == 0);

  CHECK(run_cli({"gen", "--n", "0", "--conj", "0"}).code == 1);
  CHECK(run_cli({"gen", "--n", "-1", "--conj", "2"}).code == 1);
  CHECK(run_cli({"gen", "--n", "2", "--out", "/nonexistent/dir/x.json"}).code == 1);
}

TEST_CASE("check-truth detects a wrong truth") {
  TempDir dir;
  const std::string path = dir.write(
      "eq.json", R"({"terms":[{"c":[1,0,0,0],"b":[1,0,0,0]}],"rhs":[2,0,0,0],"truth":[3,0,0,0]})");
  CHECK(run_cli({"solve", path}).code == 0);
  CHECK(run_cli({"solve", path, "--check-truth"}).code == 3);
}

TEST_CASE("verify") {
  const Result empty = run_cli({"verify", "--cases", "0", "--json"});
  CHECK(empty.code == 0);
  const auto doc = nlohmann::json::parse(empty.out);
  CHECK(doc["ok"] == true);
  CHECK(doc["cases"].empty());
  CHECK(doc["failures"].empty());

  const Result small = run_cli({"verify", "--cases", "20", "--n-max", "8", "--json"});
  CHECK(small.code == 0);
  const auto report = nlohmann::json::parse(small.out);
  CHECK(report["ok"] == true);
  CHECK(report["cases"].size() == 40);
  CHECK(report["checks"]["tri_dual_clifford"] == 20);
  CHECK(report["checks"]["oracle_equivalence"].get<int>() > 0);

  CHECK(run_cli({"verify", "--cases", "-1"}).code == 1);
}

TEST_CASE("bench csv") {
  TempDir dir;
  const std::string path = (dir / "bench.csv").string();
  REQUIRE(run_cli({"bench", "--n-max", "2", "--reps", "3", "--csv", path}).code == 0);
  std::istringstream csv(slurp(path));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "n,method,median_ns,residual_max");
  std::map<std::string, int> rows;
  while (std::getline(csv, line)) {
    std::istringstream fields(line);
    std::string n, method, median, residual;
    std::getline(fields, n, ',');
    std::getline(fields, method, ',');
    std::getline(fields, median, ',');
    std::getline(fields, residual, ',');
    CHECK(std::stod(median) > 0.0);
    CHECK(std::stod(residual) < 1e-12);
    ++rows[method];
  }
  CHECK(rows.size() == 3);
  for (const auto& [method, count] : rows) CHECK(count >= 3);

  CHECK(run_cli({"bench", "--n-max", "2", "--reps", "1", "--csv", "/nonexistent/dir/b.csv"}).code == 1);
}
