#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace knotkit {

enum class ErrorCode {
  UndefinedPair,
  NoPreimage,
  BadParameter,
  NotTotal,
  MalformedInput,
  InconsistentRotation,
  BadStrandPairing,
  Disconnected,
  DegreeTooLow,
  TheoryMismatch,
  NotACycle,
  NotWholeColoured,
  WrongTable,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace knotkit
