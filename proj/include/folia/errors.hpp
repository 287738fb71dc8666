#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace folia {

// The numeric values double as the command-line exit codes.
enum class ErrorKind {
  Parse = 2,
  Validation = 3,
  Abort = 4,
  Invariant = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorKind::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Invalid input: malformed data, violated preconditions, mixed fields.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ErrorKind::Validation, what) {}
};

/// A bounded algorithm gave up: degree ceiling, extension cap, factorization limits.
class AlgorithmAbort : public Error {
 public:
  explicit AlgorithmAbort(const std::string& what) : Error(ErrorKind::Abort, what) {}
};

/// A mathematical invariant failed to hold. Always a bug or corrupted data.
class InvariantBreach : public Error {
 public:
  explicit InvariantBreach(const std::string& what) : Error(ErrorKind::Invariant, what) {}
};

}  // namespace folia
