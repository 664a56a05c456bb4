#pragma once

#include <string>
#include <vector>

namespace quenchlab {

// Entry point for the command-line driver, split out from main() so tests can
// invoke it in-process. `args` holds the arguments *without* the program name.
//
// Exit codes:
//   0 - success (including --help)
//   1 - configuration error: bad flag values, unknown problem, invalid design
//   2 - I/O or file-format error: unreadable/corrupt CSV or JSON, write failure
int cli_main(const std::vector<std::string>& args);

}  // namespace quenchlab
