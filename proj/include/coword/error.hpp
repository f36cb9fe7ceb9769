#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coword {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
  UnterminatedRecord,
  MalformedTagLine,
  InvalidFieldValue,
  DuplicateId,
};

const char* to_string(ParseErrorKind kind);

/// Raised by the record parser; `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::string detail_;
};

/// Filesystem failures (unreadable input, unwritable workspace).
class IoError : public Error {
 public:
  using Error::Error;
};

class ThesaurusConflict : public Error {
 public:
  using Error::Error;
};

class InvalidScheme : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Empty-input conditions, one type per contract so callers can tell them apart.
class EmptyKeyword : public Error {
 public:
  using Error::Error;
};
class EmptyTheme : public Error {
 public:
  using Error::Error;
};
class EmptyVocabulary : public Error {
 public:
  using Error::Error;
};
class EmptySet : public Error {
 public:
  using Error::Error;
};
class TooFewPeriods : public Error {
 public:
  using Error::Error;
};
class EmptyDiagram : public Error {
 public:
  using Error::Error;
};
class EmptyChain : public Error {
 public:
  using Error::Error;
};
class EmptyGraph : public Error {
 public:
  using Error::Error;
};

}  // namespace coword
