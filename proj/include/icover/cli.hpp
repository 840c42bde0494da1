#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace icover::cli {

// Runs one command-line invocation. `args` excludes the program name; `in`
// serves as stdin for `-i -` (the default), `out`/`err` as stdout/stderr.
// Returns the process exit code: 0 success, 1 bad input or usage, 2 broken
// internal invariant.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace icover::cli
