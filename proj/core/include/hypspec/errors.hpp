#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypspec {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input files that cannot be parsed into the expected document.
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A graph or surface does not have the structure an operation requires.
class StructureError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The request is well-formed but outside what is implemented.
class UnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Randomized generation ran out of its retry budget.
class GenerationError : public DomainError {
 public:
  GenerationError(const std::string& what, std::size_t attempts)
      : DomainError(what + " (after " + std::to_string(attempts) + " attempts)"),
        attempts_(attempts) {}

  std::size_t attempts() const noexcept { return attempts_; }

 private:
  std::size_t attempts_;
};

/// An iterative numerical method failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// The surface could not be certified, so no bound is issued for it.
class CertificationRefused : public Error {
 public:
  using Error::Error;
};

}  // namespace hypspec
