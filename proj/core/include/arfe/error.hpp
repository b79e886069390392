#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace arfe {

// Base of every error raised by the library. `code()` is a short
// machine-readable tag, stable across releases.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error("parse-error", message) {}
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& message) : Error("dimension-mismatch", message) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message) : Error("precondition", message) {}
  PreconditionError(std::string code, const std::string& message) : Error(std::move(code), message) {}
};

class DegenerateFormError : public PreconditionError {
 public:
  explicit DegenerateFormError(const std::string& message)
      : PreconditionError("degenerate-form", message) {}
};

class NotOrthogonalError : public PreconditionError {
 public:
  explicit NotOrthogonalError(const std::string& message)
      : PreconditionError("not-orthogonal", message) {}
};

// Raised when i and i∘h are not regularly homotopic, i.e. h_* does not
// preserve the Pinkall form.
class MembershipError : public PreconditionError {
 public:
  explicit MembershipError(const std::string& message)
      : PreconditionError("not-regularly-homotopic", message) {}
};

class ResourceGuardError : public PreconditionError {
 public:
  explicit ResourceGuardError(const std::string& message)
      : PreconditionError("resource-guard", message) {}
};

}  // namespace arfe
