#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace inalg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different polynomial rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A degree-taking operation received the zero polynomial.
class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

/// Input is malformed: bad arity, bad order spec, unknown variable, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input was required to be graded (homogeneous) for some weight but is not.
class NotGraded : public Error {
 public:
  using Error::Error;
};

/// A Betti table was used for invariants it cannot certify.
class IncompleteTable : public Error {
 public:
  using Error::Error;
};

/// A theorem-backed consistency check failed; always an implementation bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// The configured computation step limit was exhausted.
class StepLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. Line and column are 1-based; line 0 means
/// the input was a single expression without line structure.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), reason_(what), line_(line), column_(column) {}

  /// The message without position.
  const std::string& reason() const { return reason_; }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    if (line == 0) return "column " + std::to_string(column) + ": " + what;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + what;
  }

  std::string reason_;
  std::size_t line_;
  std::size_t column_;
};

/// No strictly positive weight satisfies the requested comparisons. The
/// certificate c is nonnegative, nonzero, and sum_i c_i (alpha_i - beta_i) is
/// componentwise <= 0.
class Infeasible : public Error {
 public:
  explicit Infeasible(std::vector<mpz_class> certificate)
      : Error("no positive weight realizes the comparisons"),
        certificate_(std::move(certificate)) {}

  const std::vector<mpz_class>& certificate() const { return certificate_; }

 private:
  std::vector<mpz_class> certificate_;
};

}  // namespace inalg
