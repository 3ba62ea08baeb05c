#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weyl {

/// Runs one `weyl` invocation; `args` excludes the program name.
/// Returns 0 on success, 1 when a verification fails, 2 on usage or input errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weyl
