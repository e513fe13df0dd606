#pragma once

#include <stdexcept>
#include <string>

namespace bmt {

/// Malformed BMAT or certificate text.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its contract (e.g. a 1-expansion of a
/// non-affine matroid, or an illegal certificate step).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural statement the library relies on failed on a concrete input.
/// Never swallowed: this is the signal that a proved statement failed or that the
/// implementation is wrong.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bmt
