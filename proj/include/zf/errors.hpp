#pragma once

#include <stdexcept>
#include <string>

namespace zf {

/// Argument outside the domain of a function (non-finite input, |x| > 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative scheme (Newton, quadrature refinement) failed to converge.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last_iterate, double residual)
      : std::runtime_error(what), last_iterate_(last_iterate), residual_(residual) {}

  double last_iterate() const noexcept { return last_iterate_; }
  double residual() const noexcept { return residual_; }

 private:
  double last_iterate_;
  double residual_;
};

/// The radical formula produced a value that is not a root of the quartic.
class FormulaBranchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The fiber Hessian of F^2/2 is not positive definite at a sampled point.
class ConvexityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zf
