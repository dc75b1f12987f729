#pragma once

#include <stdexcept>
#include <string>

namespace skhp {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Adaptive integration hit its panel budget before meeting the tolerance.
class NonConvergence : public std::runtime_error {
  public:
    NonConvergence(std::string const& what, double best_estimate, double error_bound)
        : std::runtime_error(what), best_estimate_(best_estimate), error_bound_(error_bound) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_bound() const noexcept { return error_bound_; }

  private:
    double best_estimate_;
    double error_bound_;
};

/// The requested level is not a normalizable bound state of the model.
class NoBoundState : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Momentum-space machinery exists only for l = 0.
class UnsupportedL : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A finite-difference stencil reached beta <= 0.
class StencilFailure : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

} // namespace skhp
