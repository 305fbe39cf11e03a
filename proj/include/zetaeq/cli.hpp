// Command-line front end. Exit codes: 0 success or predicate true, 1 predicate
// false, 2 usage or input error (one-line diagnostic on the error stream).
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zetaeq {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
/// argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zetaeq
