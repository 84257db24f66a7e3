#pragma once

#include <stdexcept>
#include <string>

namespace khecke {

// Input outside the mathematical domain of an operation (bad node, wrong datum,
// partition too wide, ...). Maps to exit status 1 in the CLI.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A computed identity or golden comparison did not hold. Exit status 2.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An expansion would need more terms than the requested cutoff allows.
class TruncationError : public DomainError {
 public:
  using DomainError::DomainError;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void domain_fail(const std::string& msg) { throw DomainError(msg); }

}  // namespace khecke
