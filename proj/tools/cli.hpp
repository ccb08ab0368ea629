#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace oscinfo::cli {

enum ExitCode : int {
  ok = 0,
  verify_failed = 1,
  usage = 2,
  io = 3,
  numeric = 4,
};

/// Flat "key = value" file; '#' starts a comment. Keys are option long names
/// without the leading dashes ('_' and '-' are interchangeable).
std::map<std::string, std::string> read_config_file(const std::string& path);

/// args excludes the program name. CSV/SVG going to "-" is written to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oscinfo::cli
