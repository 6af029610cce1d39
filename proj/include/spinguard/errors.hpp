#pragma once

#include <stdexcept>
#include <string>

namespace spinguard {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Failures of the numerical pipeline (CLI exit code 3).
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NoConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NotPSD : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NotUnitary : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NotNormalized : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DegenerateParams : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Caller passed an argument outside the documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidSlot : public DomainError {
 public:
  using DomainError::DomainError;
};

class TauOutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidPeriod : public DomainError {
 public:
  using DomainError::DomainError;
};

// A state failed its type invariants (normalization, Hermiticity, trace, PSD).
class InvalidState : public DomainError {
 public:
  using DomainError::DomainError;
};

// Configuration problems (CLI exit code 1).
class ConfigError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ConfigError {
 public:
  ParseError(int line, const std::string& what)
      : ConfigError("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

class ValidationError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// The closed-form references only hold for the Bell preset.
class OracleGuardViolation : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

}  // namespace spinguard
