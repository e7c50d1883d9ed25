#ifndef SPLITCM_CLI_HPP
#define SPLITCM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace splitcm {

inline constexpr const char* kToolVersion = "0.1.0";

/// Entry point shared by the splitcm binary and the tests. args excludes the
/// program name. Exit codes: 0 affirmative, 1 negative verdict, 2 input or
/// usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splitcm

#endif
