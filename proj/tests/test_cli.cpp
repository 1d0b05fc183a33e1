#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "colhopf/cli.hpp"
#include "colhopf/report_io.hpp"

using namespace colhopf;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/colhopf_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("complex literal parsing") {
  CHECK(parse_complex("0.5") == Complex(0.5, 0.0));
  CHECK(parse_complex("-0.3") == Complex(-0.3, 0.0));
  CHECK(parse_complex("+1") == Complex(1.0, 0.0));
  CHECK(parse_complex("1+2i") == Complex(1.0, 2.0));
  CHECK(parse_complex("1-2i") == Complex(1.0, -2.0));
  CHECK(parse_complex("2i") == Complex(0.0, 2.0));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(parse_complex("i") == Complex(0.0, 1.0));
  CHECK(parse_complex("1e-3+2.5i") == Complex(1e-3, 2.5));
  CHECK(parse_complex("2.5e-2i") == Complex(0.0, 2.5e-2));
  CHECK_THROWS_AS(parse_complex("abc"), std::exception);
  CHECK_THROWS_AS(parse_complex(""), std::exception);
}

TEST_CASE("list-algebras exits cleanly") { CHECK(run_cli({"list-algebras"}) == 0); }

TEST_CASE("rmatrix emits the gl(2) matrix with the expected diagonal") {
  TempFile out("gl2.json");
  const int rc = run_cli({"rmatrix", "--algebra", "uqs_gl2", "--param", "eta=0.6931",
                          "--param", "s=1.2", "--colour", "lambda=0.5", "--colour", "mu=-0.3",
                          "--out", out.path});
  CHECK(rc == 0);
  const RMatrixDocument doc = rmatrix_from_json(slurp(out.path));
  CHECK(doc.algebra == "uqs_gl2");
  CHECK(doc.dimension == 4);
  const Complex q = std::exp(Complex(0.6931));
  const Complex l(0.5), m(-0.3);
  CHECK(std::abs(doc.entries[0] - std::pow(q, 1.0 - l + m)) < 1e-12);
  CHECK(std::abs(doc.entries[5] - std::pow(q, l + m)) < 1e-12);
  CHECK(std::abs(doc.entries[10] - std::pow(q, -l - m)) < 1e-12);
  CHECK(std::abs(doc.entries[15] - std::pow(q, 1.0 + l - m)) < 1e-12);
}

TEST_CASE("csv and json emissions agree entrywise") {
  TempFile json_out("r.json"), csv_out("r.csv");
  const std::vector<std::string> common = {"rmatrix", "--algebra",  "uh_sl2",
                                           "--param", "h=0.3",      "--colour",
                                           "lambda=1.5", "--colour", "mu=-0.7+0.2i"};
  auto with = [&](const std::string& fmt, const std::string& path) {
    std::vector<std::string> args = common;
    args.insert(args.end(), {"--format", fmt, "--out", path});
    return run_cli(args);
  };
  CHECK(with("json", json_out.path) == 0);
  CHECK(with("csv", csv_out.path) == 0);
  const RMatrixDocument doc = rmatrix_from_json(slurp(json_out.path));
  const std::vector<Complex> csv = rmatrix_entries_from_csv(slurp(csv_out.path));
  REQUIRE(csv.size() == doc.entries.size());
  for (std::size_t i = 0; i < csv.size(); ++i)
    CHECK(std::abs(csv[i] - doc.entries[i]) < 1e-15);
}

TEST_CASE("sign colours accept +1/-1") {
  TempFile out("s2.json");
  const int rc = run_cli({"rmatrix", "--algebra", "uq_sl2", "--colouring", "s2", "--param",
                          "eta=0.6931471805599453", "--colour", "lambda=+1", "--colour",
                          "mu=-1", "--out", out.path});
  CHECK(rc == 0);
  const RMatrixDocument doc = rmatrix_from_json(slurp(out.path));
  // R^{+,-} corner entry is q - q^-1 = 1.5 at q = 2
  CHECK(std::abs(doc.entries[3] - Complex(1.5)) < 1e-12);
}

TEST_CASE("usage and construction errors exit with code 2") {
  CHECK(run_cli({"rmatrix", "--algebra", "bogus"}) == 2);
  CHECK(run_cli({"rmatrix"}) == 2);                       // missing required flag
  CHECK(run_cli({"frobnicate"}) == 2);                    // unknown subcommand
  CHECK(run_cli({"verify", "--algebra", "bogus", "--samples", "1"}) == 2);
  CHECK(run_cli({"rmatrix", "--algebra", "uq_sl2", "--param", "eta"}) == 2);  // not name=value
  CHECK(run_cli({"rmatrix", "--algebra", "uq_sl2", "--colour", "lambda=1", "--colour",
                 "mu=1", "--format", "yaml"}) == 2);
  // unknown colouring, missing pair component, non-sign value for S2
  CHECK(run_cli({"rmatrix", "--algebra", "uq_sl2", "--colouring", "np", "--colour",
                 "lambda=1", "--colour", "mu=1"}) == 2);
  CHECK(run_cli({"rmatrix", "--algebra", "uz_h4_std", "--colour", "lambda1=1", "--colour",
                 "mu1=1", "--colour", "mu2=1"}) == 2);
  CHECK(run_cli({"rmatrix", "--algebra", "uq_sl2", "--colouring", "s2", "--colour",
                 "lambda=0.5", "--colour", "mu=1"}) == 2);
  // report I/O failure
  CHECK(run_cli({"verify", "--algebra", "uq_sl2", "--colouring", "s2", "--samples", "1",
                 "--report", "/nonexistent-dir/x.json"}) == 2);
}

TEST_CASE("verify exit codes reflect mandatory outcomes") {
  CHECK(run_cli({"verify", "--algebra", "uq_sl2", "--colouring", "s2", "--samples", "2",
                 "--seed", "42"}) == 0);
  // an absurdly tight tolerance forces mandatory failures
  CHECK(run_cli({"verify", "--algebra", "uq_sl2", "--colouring", "s2", "--samples", "2",
                 "--seed", "42", "--tol", "1e-18"}) == 1);
}

TEST_CASE("verify writes a report file") {
  TempFile out("report.json");
  CHECK(run_cli({"verify", "--algebra", "uz_h4_ns1", "--samples", "2", "--seed", "5",
                 "--report", out.path}) == 0);
  const CheckReport report = report_from_json(slurp(out.path));
  CHECK(report.seed == 5);
  CHECK(report.all_mandatory_pass());
  CHECK_FALSE(report.entries.empty());
}
