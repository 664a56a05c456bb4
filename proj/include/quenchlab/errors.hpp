#pragma once

#include <stdexcept>
#include <string>

namespace quenchlab {

// Malformed input files (CSV rows, design JSON). Carries a message that names
// the offending line/field; the CLI maps it to exit code 2.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace quenchlab
