#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pancake {

enum class ErrorKind {
  InvalidArgument,
  SizeMismatch,
  ParseError,
  NotFortuitousShape,
  ExtractionStuck,
  WrongLength,
  DoesNotSort,
  ShapeMismatch,
  UnsupportedN,
};

std::string_view to_string(ErrorKind kind);

/// Domain failure raised by the library. `kind()` lets callers branch on the
/// cause without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pancake
