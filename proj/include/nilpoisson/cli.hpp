#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilpoisson::cli {

// args excludes the program name. Exit codes: 0 ok, 1 validation error,
// 2 inconclusive isomorphism test.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilpoisson::cli
