#pragma once

#include <stdexcept>
#include <string>

namespace hsg {

// Malformed input, capacity overruns and similar are exceptions; law
// violations are never exceptions, they land in a Report.
enum class ErrorCode {
  malformed_input, // dangling ids, bad tables, schema violations
  not_found,       // unknown token/axis/preset
  precondition,    // documented precondition violated
  capacity,        // enumeration cap exceeded
  conflict,        // registry conflicts (duplicate id, symbol clash)
  io,              // file system / encoding
  internal,        // invariant breach, must be unreachable
};

inline const char *error_code_name(ErrorCode c) {
  switch (c) {
  case ErrorCode::malformed_input:
    return "malformed-input";
  case ErrorCode::not_found:
    return "not-found";
  case ErrorCode::precondition:
    return "precondition";
  case ErrorCode::capacity:
    return "capacity";
  case ErrorCode::conflict:
    return "conflict";
  case ErrorCode::io:
    return "io";
  case ErrorCode::internal:
    return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &msg) {
  throw Error(code, msg);
}

} // namespace hsg
