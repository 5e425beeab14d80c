#pragma once

#include <stdexcept>
#include <string>

namespace dimfree {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not satisfy an operator's precondition.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Argument outside an operation's domain (zero scalar, non-positive dim, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An lcm or Kronecker dimension would exceed 2^62.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public NumericError {
 public:
  NotInvertible(const std::string& what, double criterion)
      : NumericError(what), criterion_(criterion) {}
  double criterion() const noexcept { return criterion_; }

 private:
  double criterion_;
};

class NonConvergent : public NumericError {
 public:
  NonConvergent(const std::string& what, double last_term_norm)
      : NumericError(what), last_term_norm_(last_term_norm) {}
  double last_term_norm() const noexcept { return last_term_norm_; }

 private:
  double last_term_norm_;
};

class DimensionNotInvariant : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : Error(what), column_(column) {}
  // 1-based column of the offending character; 0 when not applicable.
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace dimfree
