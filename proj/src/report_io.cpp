#include "colhopf/report_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace colhopf {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json complex_to_json(Complex v) { return ordered_json::array({v.real(), v.imag()}); }

Complex complex_from_json(const ordered_json& j) {
  return Complex(j.at(0).get<double>(), j.at(1).get<double>());
}

ordered_json params_to_json(const std::map<std::string, Complex>& m) {
  ordered_json j = ordered_json::object();
  for (const auto& [name, value] : m) j[name] = complex_to_json(value);
  return j;
}

}  // namespace

std::string report_to_json(const CheckReport& report) {
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["seed"] = report.seed;
  j["tolerance"] = report.tol;
  j["samples"] = report.samples;
  j["convention"] = report.convention;
  j["all_mandatory_pass"] = report.all_mandatory_pass();

  ordered_json summary = ordered_json::array();
  for (const CheckSummary& s : report.summaries()) {
    ordered_json js;
    js["check"] = s.check;
    js["count"] = s.count;
    js["passes"] = s.passes;
    js["failures"] = s.failures;
    js["mandatory_failures"] = s.mandatory_failures;
    js["max_residual"] = s.max_residual;
    summary.push_back(std::move(js));
  }
  j["summary"] = std::move(summary);

  ordered_json entries = ordered_json::array();
  for (const CheckEntry& e : report.entries) {
    ordered_json je;
    je["check"] = e.check;
    je["algebra"] = e.algebra;
    je["colouring"] = e.colouring;
    je["params"] = e.params;
    je["colours"] = e.colours;
    je["residual"] = e.residual;
    je["tol"] = e.tol;
    je["pass"] = e.pass;
    je["mandatory"] = e.mandatory;
    if (!e.note.empty()) je["note"] = e.note;
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

void write_report(const CheckReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_report: cannot open '" + path + "'");
  out << report_to_json(report);
  if (!out) throw std::runtime_error("write_report: write failed for '" + path + "'");
}

CheckReport report_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  CheckReport report;
  report.seed = j.at("seed").get<std::uint64_t>();
  report.tol = j.at("tolerance").get<double>();
  report.samples = j.at("samples").get<int>();
  report.convention = j.at("convention").get<std::string>();
  for (const auto& je : j.at("entries")) {
    CheckEntry e;
    e.check = je.at("check").get<std::string>();
    e.algebra = je.at("algebra").get<std::string>();
    e.colouring = je.at("colouring").get<std::string>();
    e.params = je.at("params").get<std::string>();
    e.colours = je.at("colours").get<std::string>();
    e.residual = je.at("residual").get<double>();
    e.tol = je.at("tol").get<double>();
    e.pass = je.at("pass").get<bool>();
    e.mandatory = je.at("mandatory").get<bool>();
    if (je.contains("note")) e.note = je.at("note").get<std::string>();
    report.entries.push_back(std::move(e));
  }
  return report;
}

RMatrixDocument make_rmatrix_document(const AlgebraSpec& spec, const std::string& colouring,
                                      const ColourPoint& lambda, const ColourPoint& mu,
                                      RepConvention convention) {
  RMatrixDocument doc;
  doc.algebra = spec.id;
  doc.colouring = colouring;
  doc.convention = convention_name(convention);
  doc.params = spec.params.values();
  const ColourGroupKind kind = colouring_group(spec, colouring);
  const bool pair_like = group_continuous_rank(kind) >= 2 || kind == ColourGroupKind::SemiDirect;
  if (pair_like) {
    doc.colours["lambda1"] = lambda.c1();
    doc.colours["lambda2"] = lambda.c2();
    doc.colours["mu1"] = mu.c1();
    doc.colours["mu2"] = mu.c2();
  } else {
    doc.colours["lambda"] = lambda.c1();
    doc.colours["mu"] = mu.c1();
  }
  doc.normalization = spec.normalization;
  const ComplexMatrix r = coloured_R_matrix(spec, colouring, lambda, mu, convention);
  doc.dimension = r.rows();
  doc.entries = r.entries();
  for (const Complex& v : doc.entries)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::runtime_error("rmatrix document contains non-finite entries");
  return doc;
}

std::string rmatrix_to_json(const RMatrixDocument& doc) {
  ordered_json j;
  j["tool_version"] = doc.tool_version;
  j["algebra"] = doc.algebra;
  j["colouring"] = doc.colouring;
  j["convention"] = doc.convention;
  j["params"] = params_to_json(doc.params);
  j["colours"] = params_to_json(doc.colours);
  j["normalization"] = complex_to_json(doc.normalization);
  j["dimension"] = doc.dimension;
  ordered_json entries = ordered_json::array();
  for (const Complex& v : doc.entries) entries.push_back(complex_to_json(v));
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

std::string rmatrix_to_csv(const RMatrixDocument& doc) {
  std::ostringstream os;
  os.precision(17);
  os << "row,col,re,im\n";
  for (int i = 0; i < doc.dimension; ++i)
    for (int j = 0; j < doc.dimension; ++j) {
      const Complex v = doc.entries[static_cast<std::size_t>(i) * doc.dimension + j];
      os << i << "," << j << "," << v.real() << "," << v.imag() << "\n";
    }
  return os.str();
}

RMatrixDocument rmatrix_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  RMatrixDocument doc;
  doc.tool_version = j.at("tool_version").get<std::string>();
  doc.algebra = j.at("algebra").get<std::string>();
  doc.colouring = j.at("colouring").get<std::string>();
  doc.convention = j.at("convention").get<std::string>();
  for (const auto& [name, value] : j.at("params").items())
    doc.params[name] = complex_from_json(value);
  for (const auto& [name, value] : j.at("colours").items())
    doc.colours[name] = complex_from_json(value);
  doc.normalization = complex_from_json(j.at("normalization"));
  doc.dimension = j.at("dimension").get<int>();
  for (const auto& e : j.at("entries")) doc.entries.push_back(complex_from_json(e));
  if (static_cast<int>(doc.entries.size()) != doc.dimension * doc.dimension)
    throw std::runtime_error("rmatrix document: entry count does not match dimension^2");
  return doc;
}

std::vector<Complex> rmatrix_entries_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);  // header
  std::vector<Complex> entries;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    std::getline(ls, field, ',');  // row
    std::getline(ls, field, ',');  // col
    std::string re_s, im_s;
    std::getline(ls, re_s, ',');
    std::getline(ls, im_s, ',');
    entries.emplace_back(std::stod(re_s), std::stod(im_s));
  }
  return entries;
}

}  // namespace colhopf
