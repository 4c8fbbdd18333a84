#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsdelta {

enum class ErrorCode {
  empty_generators,
  zero_generator,
  gcd_not_one,
  not_member,
  invalid_argument,
  overflow,
  cap_exceeded,
  budget_exceeded,
  threshold_not_met,
};

std::string_view to_string(ErrorCode code);

// Every library failure carries a machine-readable code; the CLI maps codes to
// exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nsdelta
