#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shiftlab {

enum class ErrorKind {
  // input / file problems
  ParseError,
  ValidationError,
  UnknownLabel,
  IoError,
  // mathematical preconditions
  EmptyAfterEssentialization,
  NotIrreducible,
  InfiniteToOne,
  WordNotInImage,
  CoordinateNotInterior,
  InvalidArgument,
  CodomainMismatch,
  LanguageNotContained,
  NotInImage,
  NotMinimal,
  BridgeNotInImage,
  NonPermutation,
  NotMagic,
  InconsistentContexts,
  ImageNotEqual,
  NotProperSubshift,
  WordInSubshift,
  MonoidCapped,
};

std::string_view to_string(ErrorKind kind);

// True for failures caused by the input data rather than by a violated
// mathematical precondition (exit code 1 vs 2 in the CLI).
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace shiftlab
