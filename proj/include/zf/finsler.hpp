#pragma once

// The fundamental function F of the K = 1 Finsler metric on the manifold of
// geodesics: the unique positive root of A F^4 + B F^3 + C F^2 + D F + E = 0,
// evaluated in closed radicals, together with numerical checks of the Finsler
// axioms and of the flag curvature.

#include <array>
#include <string>

#include "zf/curvature.hpp"
#include "zf/indicatrix.hpp"
#include "zf/polyroots.hpp"

namespace zf::finsler {

using indicatrix::QuarticCoeffs;
using indicatrix::TangentSample;

enum class RootPattern {
  two_real,    // one positive, one negative, one conjugate pair
  four_real,
  degenerate,  // E == 0: the v1 = 0 stratum, F = 0 is a double root
};

std::string to_string(RootPattern p);

struct RootCensus {
  RootPattern pattern = RootPattern::two_real;
  int positive = 0;
  int negative = 0;
  int zero = 0;
  double product = 0;  // E / A, the product of the four roots
  std::array<poly::Complex, 4> roots{};
};

/// Classifies the roots of the quartic.  A root counts as real when its
/// imaginary part is below 1e-9 of its modulus (or of the coefficient scale).
RootCensus root_classify(const QuarticCoeffs& qc);

/// Depressed form X^4 + alpha X^2 + beta X + gamma with F = X - shift.
/// Throws DomainError unless A > 0.
poly::DepressedQuartic depress(const QuarticCoeffs& qc);

enum class EvalPath {
  radical,    // the closed formula through the resolvent cubic
  quadratic,  // |v1| tiny: F^2 (A F^2 + B F + C) = 0
  fallback,   // radical value rejected, largest real root of the full solve
};

std::string to_string(EvalPath p);

struct FinslerEval {
  double F = 0;           // closed-form value
  double F_polished = 0;  // Newton fixed point started from F
  double residual = 0;    // backward error of F in the quartic
  double polish_gap = 0;  // |F - F_polished|
  bool trusted = false;   // residual <= 1e-8, polish_gap <= 1e-7 F, F > 0
  EvalPath path = EvalPath::radical;
  RootPattern pattern = RootPattern::two_real;

  QuarticCoeffs coeffs;
  poly::DepressedQuartic depressed;
  poly::ResolventSolution resolvent;
  double first_radical = 0;   // s sqrt(-z1), s = -sign(beta)
  double second_radical = 0;  // sqrt(-z2) + sqrt(-z3)
};

struct FiberHessian {
  double g11 = 0, g12 = 0, g22 = 0;
  double eig_min = 0, eig_max = 0;
  double error_estimate = 0;  // largest change between the two difference orders
};

class FinslerMetric {
 public:
  /// epsilon in [0, 1/2); epsilon = 0 is the round sphere.  Base points must
  /// satisfy |R| <= pi/2 - chart_margin.
  explicit FinslerMetric(double epsilon, double chart_margin = 1e-3);

  double epsilon() const noexcept { return epsilon_; }
  double chart_margin() const noexcept { return chart_margin_; }

  /// F at (R, theta; v1, v2).  theta does not enter the formula.
  FinslerEval evaluate(const TangentSample& t) const;
  FinslerEval evaluate(double R, double v1, double v2) const;

  /// The polished root; the value used for all differentiation.
  double norm(double R, double v1, double v2) const;

  /// g_ij = 1/2 d^2 F^2 / dv_i dv_j by central differences at h = 1e-4 |v| and
  /// h/2 with Richardson extrapolation.  Throws ConvexityViolation if the
  /// smaller eigenvalue is not positive.
  FiberHessian hessian(double R, double v1, double v2) const;

  /// |F(lambda v) - lambda F(v)| / (lambda F(v)) for the closed-form F.
  double homogeneity_defect(double R, double v1, double v2, double lambda) const;

  /// Flag curvature at (R, theta) in direction (v1, v2).  DomainError if the
  /// difference stencil would leave the chart.
  CurvatureResult flag_curvature(double R, double theta, double v1, double v2,
                                 const DifferenceSteps& steps = {}) const;

 private:
  void check_point(double R, double v1, double v2) const;

  double epsilon_;
  double chart_margin_;
};

}  // namespace zf::finsler
