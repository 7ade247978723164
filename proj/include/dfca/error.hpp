#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace dfca {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed in-memory structure: index out of range, duplicate names,
/// cyclic order, non-convex ranking, mismatched contexts.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Text that does not follow a grammar or file format. Carries the byte
/// offset inside the offending line and, for files, the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset,
             std::optional<std::size_t> line = std::nullopt);

  std::size_t offset() const noexcept { return offset_; }
  std::optional<std::size_t> line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

  /// Same error, re-anchored at a file line.
  ParseError at_line(std::size_t line) const;

 private:
  std::string detail_;
  std::size_t offset_;
  std::optional<std::size_t> line_;
};

/// A formula mentions a name that is not part of the vocabulary.
class BindingError : public Error {
 public:
  explicit BindingError(std::string name);
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// A strict order that is not modular was used where a ranking is required.
class ModularityError : public Error {
 public:
  using Error::Error;
};

/// A knowledge base that is not Delta-valid for the context.
class ValidityError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its configured bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Input that is well-formed but outside what an operation accepts.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace dfca
