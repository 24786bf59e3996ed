#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ttable::cli {

// Exit codes shared by every subcommand:
//   0  success
//   1  evaluation error
//   2  expression parse error
//   3  file, format, or usage error

/// `eval`: evaluate a table expression against type and data files.
/// Results go to `out` unless --out is given; diagnostics go to `diag`.
int cmd_eval(const std::vector<std::string>& args, std::ostream& out, std::ostream& diag);

/// `import`: parse a rendered table back into attributed data.
int cmd_import(const std::vector<std::string>& args, std::ostream& out, std::ostream& diag);

}  // namespace ttable::cli
