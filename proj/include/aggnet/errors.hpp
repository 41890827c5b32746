#pragma once

#include <stdexcept>
#include <string>

namespace aggnet {

// Input text could not be understood (bad grammar, unknown keyword, ...).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Input was well-formed but violates a structural rule (self-loop,
// duplicate edge, disconnected graph, infeasible config, ...).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Instance is too large for the exact enumeration path.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A variable assignment could not be turned back into routes.
class DecodeError : public std::runtime_error {
 public:
  explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace aggnet
