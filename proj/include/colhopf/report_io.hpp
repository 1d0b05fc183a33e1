#pragma once

#include <map>
#include <string>

#include "colhopf/verifier.hpp"

namespace colhopf {

inline constexpr const char* kToolVersion = "0.1.0";

/// JSON document for a CheckReport: summary first, entries after, complex
/// numbers as [re, im] pairs. Serialization round-trips residuals
/// bit-for-bit.
std::string report_to_json(const CheckReport& report);
void write_report(const CheckReport& report, const std::string& path);
CheckReport report_from_json(const std::string& text);

struct RMatrixDocument {
  std::string algebra;
  std::string colouring;
  std::string convention;
  std::map<std::string, Complex> params;
  std::map<std::string, Complex> colours;
  Complex normalization = 1.0;
  int dimension = 0;
  std::vector<Complex> entries;  // row-major, dimension^2 values
  std::string tool_version = kToolVersion;
};

RMatrixDocument make_rmatrix_document(const AlgebraSpec& spec, const std::string& colouring,
                                      const ColourPoint& lambda, const ColourPoint& mu,
                                      RepConvention convention);

std::string rmatrix_to_json(const RMatrixDocument& doc);
std::string rmatrix_to_csv(const RMatrixDocument& doc);
RMatrixDocument rmatrix_from_json(const std::string& text);
std::vector<Complex> rmatrix_entries_from_csv(const std::string& text);

}  // namespace colhopf
