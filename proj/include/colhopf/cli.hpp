#pragma once

#include <string>
#include <vector>

#include "colhopf/matrix.hpp"

namespace colhopf {

/// Parses "a+bi" / "a-bi" / "bi" / bare-real complex literals.
Complex parse_complex(const std::string& text);

/// Dispatches the colhopf command line. `args` excludes the program name.
/// Exit codes: 0 all mandatory checks pass / output written, 1 at least one
/// mandatory check failed, 2 usage or construction error.
int run_cli(const std::vector<std::string>& args);

}  // namespace colhopf
