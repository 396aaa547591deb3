#pragma once

#include <stdexcept>
#include <string>

namespace ellrook {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// Malformed input: bad lengths, negative entries, unknown keys.
class ValidationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "validation"; }
};

class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
  const char* kind() const noexcept override { return "domain"; }
};

class SizeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
  const char* kind() const noexcept override { return "size"; }
};

class IndexError : public ValidationError {
 public:
  using ValidationError::ValidationError;
  const char* kind() const noexcept override { return "index"; }
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "convergence"; }
};

// A theta value in a denominator vanished or came too close to zero.
// Verification code catches this and draws a fresh parameter point.
class SingularError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "singular"; }
};

// Resampling budget spent without finding a regular parameter point.
class SingularExhaustedError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "singular_exhausted"; }
};

}  // namespace ellrook
