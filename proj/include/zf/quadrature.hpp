#pragma once

// Double-exponential (tanh-sinh) quadrature along straight segments of the
// complex plane.  The substitution clusters nodes doubly exponentially at both
// ends, which integrates algebraic endpoint singularities such as
// 1/sqrt(s - a) to full precision.

#include <complex>
#include <functional>

namespace zf::quad {

using Complex = std::complex<double>;

/// f(s, s - a): the second argument is the offset from the segment start,
/// computed without cancellation so that integrands singular at `a` can be
/// evaluated accurately at nodes extremely close to it.
using SegmentIntegrand = std::function<Complex(Complex s, Complex offset_from_start)>;

struct Result {
  Complex value;
  double error_estimate = 0;
  int levels = 0;
  int evaluations = 0;
};

/// Integral of f along the segment from a to b.  Halves the step until two
/// successive estimates agree to rel_tol; throws ConvergenceError otherwise.
Result tanh_sinh(const SegmentIntegrand& f, Complex a, Complex b, double rel_tol = 1e-13,
                 int max_level = 10);

}  // namespace zf::quad
