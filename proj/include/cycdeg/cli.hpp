#pragma once
// Command-line front end. run() takes argv without the program name and
// writes to the supplied streams; exit code 0 on success, 1 on a
// computation-domain error (and on failing verify suites), 2 on usage
// errors. Output is UTF-8, newline-terminated, locale-independent, and
// byte-identical for any --threads value.

#include <iosfwd>
#include <string>
#include <vector>

namespace cycdeg::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cycdeg::cli
