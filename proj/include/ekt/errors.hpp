#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace ekt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Point outside the model region 1 + κ/4 (x² + y²) > 0.
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A theorem hypothesis does not hold for the given input (e.g. nonzero boundary values).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what,
                   double best_bound = std::numeric_limits<double>::quiet_NaN())
      : Error(what), best_bound_(best_bound) {}
  double best_bound() const { return best_bound_; }

 private:
  double best_bound_;
};

}  // namespace ekt
