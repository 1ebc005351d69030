#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sfs {

/// Every failure the library reports. Each value maps to one exception type
/// below so callers can catch either the base `Error` or the exact kind.
enum class Errc {
  IVarNotAscend,
  SeqSizeMismatch,
  OutOfDomain,
  InvalidIndex,
  InsufficientPoints,
  InvalidOrder,
  FrozenContour,
  FsOutOfRange,
  NoCrossing,
  NonFiniteData,
  NonFiniteRhs,
  ParseError,
  ValidationError,
  IoError,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

template <Errc C>
class ErrorOf : public Error {
 public:
  explicit ErrorOf(const std::string& what) : Error(C, what) {}
};

using IVarNotAscend = ErrorOf<Errc::IVarNotAscend>;
using SeqSizeMismatch = ErrorOf<Errc::SeqSizeMismatch>;
using OutOfDomain = ErrorOf<Errc::OutOfDomain>;
using InvalidIndex = ErrorOf<Errc::InvalidIndex>;
using InsufficientPoints = ErrorOf<Errc::InsufficientPoints>;
using InvalidOrder = ErrorOf<Errc::InvalidOrder>;
using FrozenContour = ErrorOf<Errc::FrozenContour>;
using FsOutOfRange = ErrorOf<Errc::FsOutOfRange>;
using NoCrossing = ErrorOf<Errc::NoCrossing>;
using NonFiniteData = ErrorOf<Errc::NonFiniteData>;
using NonFiniteRhs = ErrorOf<Errc::NonFiniteRhs>;
using ParseError = ErrorOf<Errc::ParseError>;
using IoError = ErrorOf<Errc::IoError>;

/// Configuration or dataset value that breaks a documented constraint.
/// `key()` is the dotted key path of the offending entry.
class ValidationError : public ErrorOf<Errc::ValidationError> {
 public:
  ValidationError(std::string key, std::string detail)
      : ErrorOf(key + ": " + detail), key_(std::move(key)), detail_(std::move(detail)) {}

  const std::string& key() const noexcept { return key_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string key_;
  std::string detail_;
};

}  // namespace sfs
