#pragma once

#include <stdexcept>
#include <string>

namespace sailkit {

// Coarse error classes; the CLI maps them onto exit codes.
enum class ErrorKind {
  input,           // malformed or out-of-contract input (exit 2)
  resource_limit,  // configured cap exceeded (exit 3)
  inconclusive,    // a conclusion was requested but could not be certified (exit 4)
  internal,        // an invariant check failed; always a bug
};

// Every failure raised by the library carries a short kebab-case code
// ("collinear-points", "window-too-small", ...) plus a human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message,
                              ErrorKind kind = ErrorKind::input) {
  throw Error(kind, std::move(code), message);
}

}  // namespace sailkit
