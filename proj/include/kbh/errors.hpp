#pragma once

#include <stdexcept>
#include <string>

namespace kbh {

/// Two series with different truncation degrees were combined.
struct DegreeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A precondition on a series failed (constant term, alphabet, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Missing or colliding head/tail label in an MMA operation.
struct LabelError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual or JSON input. Carries a 1-based line number when known.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
  int line;
};

/// An internal consistency check failed: a non-Lie residue after projection,
/// a fixpoint that does not stabilise, and the like. Always a bug.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace kbh
