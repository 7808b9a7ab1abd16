#pragma once

#include <stdexcept>
#include <string>

namespace tribodyn {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  ZeroDenominator,
  DivisionByZero,
  IndexOutOfPrecisionRange,
  ForbiddenEncounter,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tribodyn
