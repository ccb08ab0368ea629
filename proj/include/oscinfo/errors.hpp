#pragma once

#include <stdexcept>
#include <string>

namespace oscinfo {

/// Caller supplied arguments that violate an operation's preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument lies outside the mathematical domain (e.g. a logarithmic pole).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure failed to reach its tolerance or broke down.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double achieved = 0.0);
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// Run configuration rejected before any work was done.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oscinfo
