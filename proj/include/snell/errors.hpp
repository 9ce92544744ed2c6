#pragma once

#include <stdexcept>
#include <string>

namespace snell {

// Input/contract errors abort the operation; structural verdicts (a poset failing
// gradedness, a search coming up empty, ...) are *results* and use verdict structs
// instead wherever the caller can reasonably continue.  Everything thrown here
// carries a kind so the CLI can map it to an exit code.
enum class ErrorKind {
  // malformed input / contract violations (CLI exit 2)
  DuplicateElement,
  UnknownElement,
  CycleDetected,
  MalformedJson,
  LabelOnNonCover,
  UnlabeledEdge,
  IndexOutOfRange,
  SizeMismatch,
  InvalidInterval,
  NotAPermutation,
  NotALinearExtension,
  UnknownChain,
  ActionTableInvalid,
  // structural failures surfaced as errors (CLI exit 1)
  NotBounded,
  NotGraded,
  NotALattice,
  SnellingInvalid,
  AmbiguousSibling,
  HeckeViolated,
  NotGoodAction,
  NoSink,
  MultipleSinks,
  NonTerminating,
  AmbiguousPermutation,
  EdgeConflict,
};

const char* to_string(ErrorKind k);

// True for kinds that mean "the input was ill-formed", as opposed to "the input is
// fine but the structure fails the property being checked".
bool is_input_error(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace snell
