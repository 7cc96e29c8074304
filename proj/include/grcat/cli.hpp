#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grcat {

/// Command-line entry point.  `args` excludes the program name.  Returns the
/// process exit code: 0 on success, 1 on input or usage errors, 2 when the
/// requested computation has a negative answer (an obstruction is nonzero, no
/// realization exists, and so on).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grcat
