#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsdelta {

// Parses argv and runs one command. Documents go to `out`, diagnostics to
// `err`. Returns the process exit code (see ExitCode).
int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsdelta
