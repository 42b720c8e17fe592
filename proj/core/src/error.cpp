#include "projrep/error.hpp"

namespace projrep {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotSorted: return "NotSorted";
    case ErrorCode::EmptyFactorList: return "EmptyFactorList";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::InvalidForm: return "InvalidForm";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::CocycleMismatch: return "CocycleMismatch";
    case ErrorCode::NotElementaryG2: return "NotElementaryG2";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VerdictMismatch: return "VerdictMismatch";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& msg)
    : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}

void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace projrep
