#pragma once

#include <stdexcept>
#include <string>

namespace qcanon {

/// Bad user input: unknown preset, malformed weight, non-admissible sigma.
/// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A property that must always hold failed at runtime. Exit code 3.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};
class UnknownLabel : public ConfigError {
 public:
  using ConfigError::ConfigError;
};
class NotReduced : public ConfigError {
 public:
  using ConfigError::ConfigError;
};
class WrongLength : public ConfigError {
 public:
  using ConfigError::ConfigError;
};
class InvalidColoring : public ConfigError {
 public:
  using ConfigError::ConfigError;
};
class NotAdmissible : public ConfigError {
 public:
  using ConfigError::ConfigError;
};
class UnsupportedPreset : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class DivisionByZero : public InvariantError {
 public:
  using InvariantError::InvariantError;
};
class SingularPivot : public InvariantError {
 public:
  using InvariantError::InvariantError;
};
class NotIntegral : public InvariantError {
 public:
  using InvariantError::InvariantError;
};
class MismatchError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};
class IndexMismatch : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

}  // namespace qcanon
