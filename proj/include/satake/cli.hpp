#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace satake {

// Full command-line surface.  args excludes the program name.  Returns the
// process exit code: 0 success, 1 failed check or computation, 2 usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace satake
