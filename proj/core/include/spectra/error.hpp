#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

/// Input lies outside the mathematical domain of an operation
/// (wrong sign of p, non-Hermitian matrix where one is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or inconsistent configuration (ensemble/checker mismatch,
/// truncation window too small, unknown config field).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative kernel failed to converge or broke down.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spectra
