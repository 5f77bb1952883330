#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hjump {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (wrong vertex range,
/// colouring of the wrong length, colour outside 1..k, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A derived parameter is undefined or violates a construction threshold.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A colouring that was required to be proper is not.
class ImproperColouring : public Error {
 public:
  using Error::Error;
};

/// A reconfiguration sequence is not a walk in the reconfiguration graph.
class InvalidPath : public Error {
 public:
  using Error::Error;
};

/// A construction violated one of its size inequalities. The message names it.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Malformed circuit structure (cycle, variable out of range).
class CircuitError : public Error {
 public:
  using Error::Error;
};

/// Resource limits. The CLI maps these to exit code 2.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Graph enumeration or circuit materialization cap exceeded.
class CapExceeded : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

/// Reconfiguration search visited more states than its node budget allows.
class BudgetExhausted : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

/// Text input that does not follow one of the file formats.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hjump
