#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rwg {

enum class ErrorCode {
  Parse,
  DuplicateEntry,
  EntryOutOfRange,
  LengthMismatch,
  LetterOutOfRange,
  TooLarge,
  Contains312,
  Contains231,
  VertexNotFound,
  NotInEncodingSet,
  Precondition,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::DuplicateEntry: return "DuplicateEntry";
    case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::LetterOutOfRange: return "LetterOutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Contains312: return "Contains312";
    case ErrorCode::Contains231: return "Contains231";
    case ErrorCode::VertexNotFound: return "VertexNotFound";
    case ErrorCode::NotInEncodingSet: return "NotInEncodingSet";
    case ErrorCode::Precondition: return "Precondition";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this type; `code()`
/// lets callers (the CLI in particular) map failures to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rwg
