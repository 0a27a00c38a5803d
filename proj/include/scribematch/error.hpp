#ifndef SCRIBEMATCH_ERROR_HPP
#define SCRIBEMATCH_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scribematch {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an operation's arguments was violated.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Input bytes are not valid UTF-8. `offset` is the first offending byte.
class DecodeError : public Error {
 public:
  DecodeError(std::size_t offset, const std::string& what)
      : Error("invalid UTF-8 at byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Malformed structured input (CSV, JSON, TSV) that cannot be recovered per row.
class FormatError : public Error {
 public:
  using Error::Error;
};

class TrainingError : public Error {
 public:
  using Error::Error;
};

class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// A persisted model or index could not be read back.
class LoadError : public Error {
 public:
  using Error::Error;
};

class BuildError : public Error {
 public:
  using Error::Error;
};

class QueryError : public Error {
 public:
  using Error::Error;
};

}  // namespace scribematch

#endif  // SCRIBEMATCH_ERROR_HPP
