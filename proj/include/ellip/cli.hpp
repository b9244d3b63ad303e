// Command-line front end. run() is a pure function of its arguments, the
// ET_MAX_K environment variable, and nothing else: identical invocations
// write identical bytes to the output stream.
//
// Exit codes: 0 success, 1 search-budget truncation (partial output is
// flagged in the JSON), 2 validation error (diagnostic on the error stream).
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ellip::cli {

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ellip::cli
