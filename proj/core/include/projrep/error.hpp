#pragma once

#include <stdexcept>
#include <string>

namespace projrep {

enum class ErrorCode {
  NotPrime,
  NotSorted,
  EmptyFactorList,
  ShapeMismatch,
  TooLarge,
  NotASubgroup,
  InvalidForm,
  GroupMismatch,
  CocycleMismatch,
  NotElementaryG2,
  PatternMismatch,
  RankOutOfRange,
  ParseError,
  VerdictMismatch,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg);
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& msg);

}  // namespace projrep
