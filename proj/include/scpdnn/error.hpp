#pragma once

#include <stdexcept>
#include <string>

namespace scp {

enum class ErrorCode {
  invalid_argument,
  parse,
  io,
  too_large,
  numerical,
};

// Single exception type for the library; the C API maps `code()` onto its
// status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace scp
