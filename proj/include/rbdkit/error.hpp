/// @file error.hpp
/// Exception types thrown by the library.
#pragma once

#include <stdexcept>
#include <string>

namespace rbdkit {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An input value violates its domain (probability outside [0,1], negative
/// duration, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A block or network is malformed (empty child list, k out of range).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Evaluation could not proceed, e.g. a component has no availability.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// A configured computational limit was hit (enumeration cap, pivot depth).
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace rbdkit
