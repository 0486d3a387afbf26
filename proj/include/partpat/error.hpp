#pragma once

#include <stdexcept>
#include <string>

namespace partpat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct OverflowError : Error {
  using Error::Error;
};

// Input violates the operation's precondition.
struct PreconditionError : Error {
  using Error::Error;
};

// A derived invariant failed; the message names the clause.
struct InvariantError : Error {
  using Error::Error;
};

}  // namespace partpat
