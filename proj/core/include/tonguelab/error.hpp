#pragma once

#include <stdexcept>
#include <string>

namespace tonguelab {

/// Failure categories surfaced by the library. Every thrown Error carries
/// one of these so callers can branch without string matching.
enum class ErrorCode {
  EmptyMask,
  NoForeground,
  DegenerateContour,
  ShapeMismatch,
  NonFinite,
  NotScalar,
  ZeroCount,
  LengthMismatch,
  SingleClass,
  MissingColumn,
  BadBit,
  BadField,
  DuplicatePath,
  TooFewSubjects,
  EmptySplit,
  IoError,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyMask: return "EmptyMask";
    case ErrorCode::NoForeground: return "NoForeground";
    case ErrorCode::DegenerateContour: return "DegenerateContour";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotScalar: return "NotScalar";
    case ErrorCode::ZeroCount: return "ZeroCount";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::SingleClass: return "SingleClass";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::BadBit: return "BadBit";
    case ErrorCode::BadField: return "BadField";
    case ErrorCode::DuplicatePath: return "DuplicatePath";
    case ErrorCode::TooFewSubjects: return "TooFewSubjects";
    case ErrorCode::EmptySplit: return "EmptySplit";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace tonguelab
