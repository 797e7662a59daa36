#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace bh3 {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed concrete syntax. `position` is a 0-based byte offset into the input.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos) : Error(what), position(pos) {}
};

/// A connective not admitted by the signature, logic, or calculus in use.
struct SignatureError : Error {
  std::string connective;
  SignatureError(const std::string& what, std::string conn)
      : Error(what), connective(std::move(conn)) {}
};

/// Evaluation failure: missing atom, inadmissible connective, or a
/// non-classical valuation fed to CPL.
struct EvalError : Error {
  using Error::Error;
};

/// Valuation enumeration over more atoms than the configured cap.
struct CapExceededError : Error {
  using Error::Error;
};

/// A documented precondition was violated by the caller.
struct PreconditionError : Error {
  using Error::Error;
};

/// Invariant breakage inside the prover pipeline. Indicates a bug, never expected.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace bh3
