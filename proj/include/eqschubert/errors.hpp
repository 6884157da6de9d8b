#pragma once

#include <stdexcept>
#include <string>

namespace eqschubert {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Remainder of an exact division was nonzero.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// Permutation is not a minimal coset representative for the flag shape.
class NotInShape : public Error {
 public:
  using Error::Error;
};

/// Polynomial has a monomial outside the staircase span of the window.
class NotInSpan : public Error {
 public:
  using Error::Error;
};

/// A basis expansion failed to reconstruct its input.
class NonzeroResidual : public Error {
 public:
  using Error::Error;
};

/// A truncated coefficient mentions t_i or q_i outside the target window.
class StrayVariables : public Error {
 public:
  using Error::Error;
};

/// Input to block_rewrite is not symmetric within some block.
class NotBlockSymmetric : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace eqschubert
