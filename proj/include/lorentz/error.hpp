#pragma once

#include <stdexcept>
#include <string>

namespace lorentz {

// Domain error with a stable machine-readable code; the CLI maps these to
// {"error": code, "detail": ...} with exit status 1.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string code_, const std::string& detail)
      : std::runtime_error(detail), code(std::move(code_)) {}
};

[[noreturn]] inline void fail(const std::string& code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace lorentz
