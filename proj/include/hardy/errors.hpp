#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace hardy {

namespace detail {
// Short scientific rendering for error messages; std::to_string rounds tiny values to zero.
inline std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}
}  // namespace detail

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Gamma evaluated on (or within 1e-14 of) a non-positive integer.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A result would overflow double precision.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// Two grid functions with different sample counts were combined.
class GridMismatchError : public Error {
 public:
  using Error::Error;
};

/// Grid function expected to be unimodular is not.
class NotInnerError : public Error {
 public:
  using Error::Error;
};

class ZeroFunctionError : public Error {
 public:
  using Error::Error;
};

/// Inner-outer factorization whose inner modulus deviation exceeds 1e-3.
class IllConditionedError : public Error {
 public:
  IllConditionedError(const std::string& what, double deviation)
      : Error(what), deviation_(deviation) {}
  double deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

/// An internal closed form disagreed with its grid computation.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double discrepancy)
      : Error(what), discrepancy_(discrepancy) {}
  double discrepancy() const noexcept { return discrepancy_; }

 private:
  double discrepancy_;
};

/// Evaluation too close to an essential singularity.
class NearSingularError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace hardy
