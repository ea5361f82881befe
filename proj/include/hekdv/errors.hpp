#pragma once

#include <stdexcept>
#include <string>

namespace hekdv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ill-formed value handed to an operation (zero denominator, bad literal, ...).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// Missing or inconsistent configuration (weights, symbols, options).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Newton step for a power series whose derivative is not a unit.
class SingularExpansion : public Error {
 public:
  using Error::Error;
};

/// Inversion of a non-unit in a quotient ring.
class ZeroDivisor : public Error {
 public:
  using Error::Error;
};

/// An s-substitution left an odd power of s behind.
class NotSymmetric : public Error {
 public:
  using Error::Error;
};

/// Numeric-only operation called on symbolic curve data (or vice versa).
class ModeError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class IncompatibleGenus : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

/// Symbolic expansion exceeded the configured memory cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Invalid seed for a numerical trajectory (off-curve point, coincident x, ...).
class SeedError : public Error {
 public:
  using Error::Error;
};

/// A trajectory stopped early (singular set, step-size underflow, step limit).
class IntegrationAbort : public Error {
 public:
  using Error::Error;
};

}  // namespace hekdv
