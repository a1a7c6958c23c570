#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dtq {

enum class ErrorKind {
  UnknownGenerator,
  CrossAlgebraMix,
  NegativePower,
  RootConditionViolated,
  NotAHopfAlgebra,
  WindowExceeded,
  CyclotomicModeUnsupported,
  NotInBaseImage,
  NonGrouplikeInput,
  IncompleteWindow,
  WindowOverflow,
  NonConvergence,
  SyntaxError,
  InvalidParams,
  ExponentOverflow,
  NotInvertible,
  CompletionFailed,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the engine carries one of the kinds above so that
/// callers (and the CLI exit-code logic) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parser errors additionally remember the offending byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorKind::SyntaxError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace dtq
