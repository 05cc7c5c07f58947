#pragma once

#include <stdexcept>
#include <string>

namespace dualcat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A morphism candidate violating one of the defining conditions.
class ValidationError : public Error {
 public:
  ValidationError(int condition, const std::string& message)
      : Error(message), condition_(condition) {}
  // 1: size mismatch, 2: paired letters differ, 3: domain complement
  // admits no cup matching, 4: codomain complement admits no cap matching,
  // 0: structural (out-of-range subsets, malformed words).
  int condition() const { return condition_; }

 private:
  int condition_;
};

// Boundary mismatch or otherwise incompatible arguments to an operation.
class CompositionError : public Error {
 public:
  using Error::Error;
};

// Malformed signatures, words, descriptors or evaluation targets.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A request whose exhaustive enumeration would exceed the configured bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Invariants that cannot fail on valid inputs; guarded defensively.
class InternalError : public Error {
 public:
  using Error::Error;
};

struct ValidationResult {
  bool ok = true;
  int condition = 0;
  std::string message;
};

}  // namespace dualcat
