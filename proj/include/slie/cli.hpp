#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slie {

/// Runs one `slie` command; args exclude the program name.
/// Exit status: 0 success, 1 violations/FAIL/input errors, 2 usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slie
