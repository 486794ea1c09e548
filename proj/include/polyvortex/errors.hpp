#pragma once

#include <stdexcept>
#include <string>

namespace polyvortex {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input: broken type invariants, bad parameters, bad files.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Field evaluated too close to a vortex or a rotation image of one.
class SingularFieldError : public Error {
 public:
  explicit SingularFieldError(const std::string& msg) : Error(msg) {}
};

/// Two vortices fell below the minimum mutual distance mid-integration.
class CloseApproachError : public Error {
 public:
  explicit CloseApproachError(const std::string& msg) : Error(msg) {}
};

/// Co-rotating ray analysis requested outside its sign/alignment hypotheses.
class HypothesisUnmetError : public Error {
 public:
  explicit HypothesisUnmetError(const std::string& msg) : Error(msg) {}
};

}  // namespace polyvortex
