#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logalg::cli {

/// Version tag written into every JSON report.
inline constexpr const char *kSchema = "logalg.report/1";

/// Runs one command line (args excludes the program name). Returns the exit
/// code: 0 success, 1 domain error or failed verification, 2 usage error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace logalg::cli
