#include "colhopf/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>

#include "CLI11.hpp"
#include "colhopf/catalog.hpp"
#include "colhopf/report_io.hpp"
#include "colhopf/verifier.hpp"

namespace colhopf {

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty complex literal");

  const bool has_i = s.back() == 'i' || s.back() == 'j';
  if (!has_i) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad complex literal '" + text + "'");
    return Complex(v, 0.0);
  }
  s.pop_back();  // strip i
  // Split at the last +/- that is not an exponent sign and not leading.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_value = [&](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    std::size_t used = 0;
    const double v = std::stod(part, &used);
    if (used != part.size()) throw std::invalid_argument("bad complex literal '" + text + "'");
    return v;
  };
  if (split == std::string::npos) return Complex(0.0, imag_value(s));
  std::size_t used = 0;
  const double re = std::stod(s.substr(0, split), &used);
  if (used != split) throw std::invalid_argument("bad complex literal '" + text + "'");
  return Complex(re, imag_value(s.substr(split)));
}

namespace {

std::map<std::string, Complex> parse_kv(const std::vector<std::string>& items,
                                        const char* what) {
  std::map<std::string, Complex> out;
  for (const std::string& item : items) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument(std::string(what) + " '" + item + "' is not name=value");
    out[item.substr(0, eq)] = parse_complex(item.substr(eq + 1));
  }
  return out;
}

double real_of(Complex v, const std::string& name) {
  if (v.imag() != 0.0)
    throw std::invalid_argument("colour component '" + name + "' must be real");
  return v.real();
}

int sign_of(Complex v, const std::string& name) {
  const double r = real_of(v, name);
  if (r != 1.0 && r != -1.0)
    throw std::invalid_argument("colour component '" + name + "' must be +1 or -1");
  return static_cast<int>(r);
}

Complex lookup(const std::map<std::string, Complex>& vals, const std::string& name) {
  auto it = vals.find(name);
  if (it == vals.end())
    throw std::invalid_argument("missing colour component '" + name + "'");
  return it->second;
}

ColourPoint colour_from_flags(ColourGroupKind kind, const std::map<std::string, Complex>& vals,
                              const std::string& prefix) {
  switch (kind) {
    case ColourGroupKind::S2:
      return ColourPoint::s2(sign_of(lookup(vals, prefix), prefix));
    case ColourGroupKind::GL1C:
      return ColourPoint::gl1c(lookup(vals, prefix));
    case ColourGroupKind::GL1R:
      return ColourPoint::gl1r(real_of(lookup(vals, prefix), prefix));
    case ColourGroupKind::SemiDirect:
      return ColourPoint::semidirect(lookup(vals, prefix + "1"),
                                     sign_of(lookup(vals, prefix + "2"), prefix + "2"));
    case ColourGroupKind::GL1CPair:
      return ColourPoint::gl1c_pair(lookup(vals, prefix + "1"), lookup(vals, prefix + "2"));
    case ColourGroupKind::GL1RPair:
      return ColourPoint::gl1r_pair(real_of(lookup(vals, prefix + "1"), prefix + "1"),
                                    real_of(lookup(vals, prefix + "2"), prefix + "2"));
  }
  throw std::logic_error("colour_from_flags: unreachable");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + out_path + "'");
}

int cmd_list_algebras() {
  for (const std::string& id : algebra_ids()) {
    const AlgebraSpec spec = build_algebra(id);
    std::string cols;
    for (const auto& c : spec.colourings) cols += (cols.empty() ? "" : ",") + c;
    std::cout << id << "  generators=" << spec.generators.size()
              << "  rep_dim=" << spec.rep_dim << "  colourings=" << cols << "\n";
  }
  return 0;
}

struct RMatrixArgs {
  std::string algebra;
  std::string colouring;
  std::vector<std::string> params;
  std::vector<std::string> colours;
  std::string convention = "paper-fixed";
  std::string format = "json";
  std::string out;
};

int cmd_rmatrix(const RMatrixArgs& a) {
  QParams params;
  for (const auto& [name, value] : parse_kv(a.params, "--param")) params.set(name, value);
  const AlgebraSpec spec = build_algebra(a.algebra, params);
  const std::string colouring = a.colouring.empty() ? spec.colourings.front() : a.colouring;
  const ColourGroupKind kind = colouring_group(spec, colouring);
  const auto colour_vals = parse_kv(a.colours, "--colour");
  const ColourPoint lambda = colour_from_flags(kind, colour_vals, "lambda");
  const ColourPoint mu = colour_from_flags(kind, colour_vals, "mu");
  const RMatrixDocument doc =
      make_rmatrix_document(spec, colouring, lambda, mu, convention_from_name(a.convention));
  if (a.format == "json")
    emit(rmatrix_to_json(doc), a.out);
  else if (a.format == "csv")
    emit(rmatrix_to_csv(doc), a.out);
  else
    throw std::invalid_argument("unknown --format '" + a.format + "' (expected json or csv)");
  return 0;
}

struct VerifyArgs {
  std::string algebra = "all";
  std::string colouring = "all";
  int samples = 20;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  std::string convention = "paper-fixed";
  std::string report_path;
  int threads = 0;
};

int cmd_verify(const VerifyArgs& a) {
  RunConfig cfg;
  if (a.algebra != "all") cfg.algebras = {a.algebra};
  if (a.colouring != "all") cfg.colourings = {a.colouring};
  cfg.samples = a.samples;
  cfg.seed = a.seed;
  cfg.tol = a.tol;
  cfg.convention = convention_from_name(a.convention);
  cfg.threads = a.threads;

  const CheckReport report = run_suite(cfg);
  for (const CheckSummary& s : report.summaries()) {
    std::cout << (s.mandatory_failures == 0 ? "PASS" : "FAIL") << "  " << s.check << "  checks="
              << s.count << "  failures=" << s.failures
              << " (mandatory " << s.mandatory_failures << ")  max_residual=" << s.max_residual
              << "\n";
  }
  std::cout << (report.all_mandatory_pass() ? "all mandatory checks passed"
                                            : "mandatory check failures present")
            << "\n";
  if (!a.report_path.empty()) write_report(report, a.report_path);
  if (report.has_errors()) return 2;
  return report.all_mandatory_pass() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"coloured Hopf algebra toolkit: coloured R-matrices and identity verification"};
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand("list-algebras", "list catalog entries");

  RMatrixArgs rargs;
  auto* rmatrix_cmd = app.add_subcommand("rmatrix", "emit a coloured R-matrix");
  rmatrix_cmd->add_option("--algebra", rargs.algebra, "catalog algebra id")->required();
  rmatrix_cmd->add_option("--colouring", rargs.colouring,
                          "colouring id (default: the algebra's first colouring)");
  rmatrix_cmd->add_option("--param", rargs.params, "deformation parameter name=value (complex)");
  rmatrix_cmd->add_option("--colour", rargs.colours,
                          "colour components lambda=.. mu=.. (pairs use lambda1,lambda2,...; "
                          "sign components are +1/-1)");
  rmatrix_cmd->add_option("--convention", rargs.convention, "paper-fixed | leg-parameter");
  rmatrix_cmd->add_option("--format", rargs.format, "json | csv");
  rmatrix_cmd->add_option("--out", rargs.out, "output path (default: stdout)");

  VerifyArgs vargs;
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  verify_cmd->add_option("--algebra", vargs.algebra, "algebra id or 'all'");
  verify_cmd->add_option("--colouring", vargs.colouring, "colouring id or 'all'");
  verify_cmd->add_option("--samples", vargs.samples, "colour samples per check");
  verify_cmd->add_option("--seed", vargs.seed, "sampling seed");
  verify_cmd->add_option("--tol", vargs.tol,
                         "identity tolerance (value-reproduction checks use tol/10)");
  verify_cmd->add_option("--convention", vargs.convention, "paper-fixed | leg-parameter");
  verify_cmd->add_option("--report", vargs.report_path, "write the JSON report here");
  verify_cmd->add_option("--threads", vargs.threads, "worker threads (0 = auto)");

  std::vector<std::string> argv = args;
  argv.insert(argv.begin(), "colhopf");
  std::vector<char*> raw;
  raw.reserve(argv.size());
  for (std::string& s : argv) raw.push_back(s.data());

  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return 0;
    }
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (list_cmd->parsed()) return cmd_list_algebras();
    if (rmatrix_cmd->parsed()) return cmd_rmatrix(rargs);
    if (verify_cmd->parsed()) return cmd_verify(vargs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace colhopf
