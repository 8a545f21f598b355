#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rieszrep {

/// Base class of everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed problems, out-of-range requests, broken files.
/// The command line maps these to exit code 2.
struct ValidationError : Error {
  using Error::Error;
};

/// An iterative routine hit its iteration cap without meeting its tolerance.
/// The command line maps this to exit code 3.
struct NonConvergence : Error {
  using Error::Error;
};

struct DimensionMismatch : ValidationError {
  using ValidationError::ValidationError;
};

struct NonFiniteEntry : ValidationError {
  using ValidationError::ValidationError;
};

/// Indices in diagnostics are 1-based, matching the w_1..w_K naming.
struct NonUnitVector : ValidationError {
  long long index;
  double norm_sq;
  NonUnitVector(long long idx, double nsq)
      : ValidationError("vector w_" + std::to_string(idx) +
                        " is not a unit vector: squared norm " +
                        std::to_string(nsq)),
        index(idx),
        norm_sq(nsq) {}
};

struct TooManyReplacements : ValidationError {
  using ValidationError::ValidationError;
};

struct IndexOutOfRange : ValidationError {
  using ValidationError::ValidationError;
};

struct NotHermitian : ValidationError {
  using ValidationError::ValidationError;
};

struct NotSquare : ValidationError {
  using ValidationError::ValidationError;
};

struct OverlappingIntervals : ValidationError {
  using ValidationError::ValidationError;
};

struct MeasureNotOne : ValidationError {
  using ValidationError::ValidationError;
};

/// The row-wise certificate condition failed. worst_row is 1-based;
/// worst_sum carries the offending quantity (off-diagonal sum or diagonal
/// magnitude, spelled out in the message).
struct ConditionViolated : Error {
  long long worst_row;
  double worst_sum;
  ConditionViolated(long long row, double sum, const std::string& what_failed)
      : Error("certificate condition violated at row " + std::to_string(row) +
              ": " + what_failed),
        worst_row(row),
        worst_sum(sum) {}
};

struct ParseError : ValidationError {
  std::string field;
  std::size_t byte;
  ParseError(std::string field_name, std::size_t byte_pos, const std::string& detail)
      : ValidationError("parse error" +
                        (field_name.empty() ? std::string()
                                            : " at field '" + field_name + "'") +
                        (byte_pos ? " (byte " + std::to_string(byte_pos) + ")"
                                  : std::string()) +
                        ": " + detail),
        field(std::move(field_name)),
        byte(byte_pos) {}
};

struct SchemaVersionUnsupported : ValidationError {
  using ValidationError::ValidationError;
};

struct UnwritableOutput : ValidationError {
  using ValidationError::ValidationError;
};

}  // namespace rieszrep
