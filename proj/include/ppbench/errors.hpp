#pragma once

#include <stdexcept>
#include <string>

namespace ppbench {

// Every failure raised by the library derives from Error so callers (the CLI in
// particular) can separate computation failures from usage mistakes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain (p not in (0,1), T <= 1, b <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// Exact covariance quadrature is restricted to small N.
class CostGuardError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Regressors or observations without spread.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A fit produced b_hat <= 0. Kept distinct so the benchmark can count and
/// discard such replicates.
class NonPositiveScale : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class InvalidPositions : public Error {
 public:
  using Error::Error;
};

class ThresholdViolation : public Error {
 public:
  using Error::Error;
};

class DataCorruption : public Error {
 public:
  using Error::Error;
};

}  // namespace ppbench
