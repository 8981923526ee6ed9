#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace commutant {

// All library errors carry the process exit code the CLI maps them to:
//   1 a requested check failed, 2 rank ambiguity, 3 numerical instability,
//   4 I/O, 5 input validation.
class Error : public std::runtime_error {
 public:
  Error(std::string message, int exit_code)
      : std::runtime_error(std::move(message)), exit_code_(exit_code) {}

  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::string message)
      : Error(std::move(message), 5) {}
};

struct DimensionMismatch : ValidationError {
  using ValidationError::ValidationError;
};

// A requested product dimension went past the configured cap.
struct SizeOverflow : ValidationError {
  using ValidationError::ValidationError;
};

struct BadParams : ValidationError {
  using ValidationError::ValidationError;
};

struct DimMissing : ValidationError {
  using ValidationError::ValidationError;
};

struct NotHermitian : ValidationError {
  using ValidationError::ValidationError;
};

struct NotPsd : ValidationError {
  using ValidationError::ValidationError;
};

struct ZeroTrace : ValidationError {
  using ValidationError::ValidationError;
};

struct UnknownOperator : ValidationError {
  using ValidationError::ValidationError;
};

// Candidate operator set is numerically linearly dependent.
struct SingularGram : ValidationError {
  using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
 public:
  ParseError(std::string message, std::size_t position)
      : ValidationError(std::move(message)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// No clean spectral separation between kernel and non-kernel eigenvalues.
class AmbiguousRank : public Error {
 public:
  AmbiguousRank(std::string message, double gap)
      : Error(std::move(message), 2), gap_(gap) {}

  double gap() const noexcept { return gap_; }

 private:
  double gap_;
};

// Kernel dimension keeps moving as generators are added.
struct UnstableDimension : Error {
  explicit UnstableDimension(std::string message) : Error(std::move(message), 3) {}
};

// A computed basis failed its own invariance re-check on fresh generators.
struct VerificationFailure : Error {
  explicit VerificationFailure(std::string message) : Error(std::move(message), 3) {}
};

struct NoConvergence : Error {
  explicit NoConvergence(std::string message) : Error(std::move(message), 3) {}
};

struct IoError : Error {
  explicit IoError(std::string message) : Error(std::move(message), 4) {}
};

// A block-structure or invariance check on user input came out negative.
// This is a result, not an internal failure, hence exit code 1.
struct StructureViolation : Error {
  explicit StructureViolation(std::string message) : Error(std::move(message), 1) {}
};

}  // namespace commutant
