#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgraph {

// Command-line front end. `args` excludes the program name. Returns the
// process exit code: 0 success / all verifications pass, 1 verification
// failure, 2 usage or parse error. Identical invocations produce
// byte-identical output (timing is opt-in via --timing).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pgraph
