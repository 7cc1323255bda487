#ifndef TDABM_ERROR_HPP
#define TDABM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tdabm {

enum class ErrorCode {
  MissingValue,
  NonNumeric,
  EmptyAfterDrop,
  EmptyTable,
  ZeroVariance,
  DimensionMismatch,
  NonPositiveEpsilon,
  ColorLengthMismatch,
  UnknownVariable,
  DuplicateColumn,
  EmptyColumnName,
  RaggedRow,
  MalformedInput,
  InvalidArgument,
  Io,
};

/// Base for every error the library reports. `code()` identifies the failure,
/// `what()` carries the user-facing message.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Bad data or bad parameters. The CLI maps this to exit status 1.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Unreadable input or unwritable output. The CLI maps this to exit status 2.
class IoError : public Error {
public:
  explicit IoError(const std::string& message) : Error(ErrorCode::Io, message) {}
};

} // namespace tdabm

#endif // TDABM_ERROR_HPP
