#pragma once

#include <stdexcept>
#include <string>

namespace rbfadapt {

// Base type for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cholesky pivot fell at or below the positive-definiteness threshold.
class NotPositiveDefinite : public Error {
 public:
  NotPositiveDefinite(int pivot_index, double pivot)
      : Error("matrix is not numerically positive definite (pivot " +
              std::to_string(pivot) + " at index " + std::to_string(pivot_index) + ")"),
        pivot_index_(pivot_index) {}
  int pivot_index() const { return pivot_index_; }

 private:
  int pivot_index_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Two nodes closer than the separation floor.
class DuplicateNodes : public Error {
 public:
  using Error::Error;
};

// Kernel shape parameter epsilon <= 0.
class InvalidShape : public Error {
 public:
  using Error::Error;
};

// Data vector identically zero where the profile likelihood needs y != 0.
class AllZeroValues : public Error {
 public:
  using Error::Error;
};

// Every probed shape parameter produced a numerically singular matrix.
class NoAdmissibleShape : public Error {
 public:
  using Error::Error;
};

class EmptyEvaluationSet : public Error {
 public:
  using Error::Error;
};

// Point outside the target function's canonical domain.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

class UnknownPreset : public Error {
 public:
  using Error::Error;
};

class InvalidDomain : public Error {
 public:
  using Error::Error;
};

// Malformed configuration (thresholds, search interval, node counts, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace rbfadapt
