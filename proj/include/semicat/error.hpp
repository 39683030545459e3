#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace semicat {

// Raised for invalid inputs and violated preconditions. The code is a short
// stable tag such as "NotAssociative"; the CLI maps it to exit status 1.
class ValidationError : public std::runtime_error {
public:
  ValidationError(std::string code, const std::string &detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string &code() const noexcept { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string &detail) {
  throw ValidationError(std::move(code), detail);
}

} // namespace semicat
