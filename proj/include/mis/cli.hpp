#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mis {

// Entry point behind the misk binary, separated out so tests can drive the
// command surface in-process. args excludes argv[0]. Results go to out,
// progress and diagnostics to err.
//
// Exit codes: 0 success, 1 solver timeout, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mis
