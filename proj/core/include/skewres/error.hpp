#pragma once

#include <stdexcept>
#include <string>

namespace skewres {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings (registry, order or field differ).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition failed (zero divisor, zero polynomial, unit ideal, ...).
class MathError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A Groebner computation ran past its time budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A chain complex failed a structural check (shape, homogeneity, d^2 = 0).
class InvalidComplex : public Error {
 public:
  using Error::Error;
};

}  // namespace skewres
