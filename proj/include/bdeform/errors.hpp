#pragma once

#include <stdexcept>
#include <string>

namespace bdeform {

/// Base of every error the engine raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A computation produced a denominator other than a power of (1+b).
class DenominatorError : public Error {
 public:
  using Error::Error;
};

/// An operator was used beyond the degree on which it is known exactly.
class DegreeBudgetError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace bdeform
