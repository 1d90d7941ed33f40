#pragma once

#include <stdexcept>
#include <string>

namespace rcoptoric {

/// Input text or data that violates the documented JSON schema or the
/// structural invariants of a colored graph document.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An operation was invoked outside its documented domain (disconnected
/// input, non-block graph, non-unique shortest path, oversized instance...).
class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configurable resource bound was exceeded (fiber cap, group-closure
/// ceiling). Reported distinctly so callers can tell "too big" from "false".
class LimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A postcondition the library guarantees internally failed to hold.
/// Seeing this means a bug in the library, not bad input.
class InternalCheckError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace rcoptoric
