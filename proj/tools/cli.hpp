#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eqaoa::cli {

// Runs one command line (args excludes the program name). Data goes to
// files, progress and errors to `err`. Failures print a single JSON line
// {"error": <kind>, "message": ...} and return a nonzero code.
int run(std::vector<std::string> args, std::ostream &out, std::ostream &err);

} // namespace eqaoa::cli
