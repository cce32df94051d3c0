#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvw::cli {

enum Exit : int { kOk = 0, kPropertyFailed = 1, kInputError = 2 };

/// Runs one subcommand. args excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace mvw::cli
