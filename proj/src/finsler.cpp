#include "zf/finsler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "zf/errors.hpp"

namespace zf::finsler {

namespace {

using poly::Complex;

constexpr double kStratum = 1e-10;       // |v1| < kStratum |v| takes the quadratic path
constexpr double kResidualTrust = 1e-8;
constexpr double kPolishTrust = 1e-7;
constexpr double kHessianStep = 1e-4;

// Positive root of A F^2 + B F + C with A > 0, C <= 0.
double positive_quadratic_root(double A, double B, double C) {
  const double disc = std::sqrt(std::max(0.0, B * B - 4 * A * C));
  if (B > 0) return disc + B > 0 ? -2 * C / (B + disc) : 0;
  return (-B + disc) / (2 * A);
}

std::string describe(const FinslerEval& e) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "coefficients (" << e.coeffs.A << ", " << e.coeffs.B << ", " << e.coeffs.C << ", " << e.coeffs.D
      << ", " << e.coeffs.E << "), resolvent roots " << e.resolvent.z1 << ", " << e.resolvent.z2 << ", "
      << e.resolvent.z3 << ", F = " << e.F;
  return msg.str();
}

}  // namespace

std::string to_string(RootPattern p) {
  switch (p) {
    case RootPattern::two_real: return "two-real";
    case RootPattern::four_real: return "four-real";
    case RootPattern::degenerate: return "degenerate";
  }
  return "unknown";
}

std::string to_string(EvalPath p) {
  switch (p) {
    case EvalPath::radical: return "radical";
    case EvalPath::quadratic: return "quadratic";
    case EvalPath::fallback: return "fallback";
  }
  return "unknown";
}

RootCensus root_classify(const QuarticCoeffs& qc) {
  if (!(qc.A > 0)) throw DomainError("root_classify: A must be positive");
  RootCensus out;
  out.product = qc.E / qc.A;
  out.roots = poly::solve_quartic(qc.A, qc.B, qc.C, qc.D, qc.E);

  // Root size from the Cauchy bound, used as the floor for "zero" and "real".
  double size = 0;
  for (const auto& x : out.roots) size = std::max(size, std::abs(x));
  int real = 0;
  for (const auto& x : out.roots) {
    if (std::abs(x.imag()) > 1e-9 * std::max(std::abs(x), 1e-6 * size)) continue;
    ++real;
    if (std::abs(x.real()) <= 1e-12 * size) ++out.zero;
    else if (x.real() > 0) ++out.positive;
    else ++out.negative;
  }
  if (qc.E == 0) out.pattern = RootPattern::degenerate;
  else out.pattern = real == 4 ? RootPattern::four_real : RootPattern::two_real;
  return out;
}

poly::DepressedQuartic depress(const QuarticCoeffs& qc) {
  if (!(qc.A > 0)) throw DomainError("depress: A must be positive");
  return poly::depress(qc.polynomial());
}

FinslerMetric::FinslerMetric(double epsilon, double chart_margin) : epsilon_(epsilon), chart_margin_(chart_margin) {
  if (!(epsilon >= 0 && epsilon < 0.5)) {
    std::ostringstream msg;
    msg << "FinslerMetric: epsilon = " << epsilon << " outside [0, 1/2)";
    throw DomainError(msg.str());
  }
  if (!(chart_margin > 0 && chart_margin < std::numbers::pi / 2))
    throw DomainError("FinslerMetric: chart margin must lie in (0, pi/2)");
}

void FinslerMetric::check_point(double R, double v1, double v2) const {
  TangentSample{R, 0, v1, v2}.validate(chart_margin_);
}

FinslerEval FinslerMetric::evaluate(const TangentSample& t) const { return evaluate(t.R, t.v1, t.v2); }

FinslerEval FinslerMetric::evaluate(double R, double v1, double v2) const {
  check_point(R, v1, v2);
  FinslerEval e;
  e.coeffs = indicatrix::quartic_coefficients(epsilon_, R, v1, v2);
  const QuarticCoeffs& q = e.coeffs;
  const poly::Quartic p = q.polynomial();
  e.depressed = depress(q);
  e.resolvent = poly::solve_resolvent(e.depressed.alpha, e.depressed.beta, e.depressed.gamma);
  e.pattern = q.E == 0 ? RootPattern::degenerate
              : e.resolvent.three_real && e.resolvent.z3.real() <= 0 && e.resolvent.z2.real() <= 0 &&
                      e.resolvent.z1.real() <= 0
                  ? RootPattern::four_real
                  : RootPattern::two_real;

  if (std::abs(v1) < kStratum * std::hypot(v1, v2)) {
    e.path = EvalPath::quadratic;
    e.F = positive_quadratic_root(q.A, q.B, q.C);
  } else {
    e.path = EvalPath::radical;
    const auto& res = e.resolvent;
    const double s = e.depressed.beta < 0 ? 1.0 : -1.0;
    e.first_radical = s * std::sqrt(std::max(0.0, -res.z1.real()));
    if (res.z2.imag() != 0) {
      e.second_radical = poly::combine_conjugate_sqrts(-res.z2.real(), -res.z2.imag());
    } else {
      e.second_radical = std::sqrt(std::max(0.0, -res.z2.real())) + std::sqrt(std::max(0.0, -res.z3.real()));
    }
    e.F = 0.5 * (e.first_radical + e.second_radical) - e.depressed.shift;
  }
  if (!std::isfinite(e.F)) throw FormulaBranchError("evaluate: non-finite F; " + describe(e));

  e.residual = p.backward_error(e.F);
  if (!(e.F > 0) || e.residual > kResidualTrust) {
    // The closed form picked a wrong branch: fall back to the largest real root.
    const RootCensus census = root_classify(q);
    double best = -HUGE_VAL;
    for (const auto& x : census.roots)
      if (std::abs(x.imag()) <= 1e-9 * std::abs(x)) best = std::max(best, x.real());
    if (best > 0) {
      e.path = EvalPath::fallback;
      e.F = best;
      e.residual = p.backward_error(e.F);
    }
  }

  try {
    e.F_polished = poly::polish_root(p, e.F);
  } catch (const ConvergenceError& err) {
    throw FormulaBranchError(std::string("evaluate: polishing failed (") + err.what() + "); " + describe(e));
  }
  e.polish_gap = std::abs(e.F - e.F_polished);
  e.trusted = e.path != EvalPath::fallback && e.F > 0 && e.residual <= kResidualTrust &&
              e.polish_gap <= kPolishTrust * e.F;
  return e;
}

double FinslerMetric::norm(double R, double v1, double v2) const { return evaluate(R, v1, v2).F_polished; }

FiberHessian FinslerMetric::hessian(double R, double v1, double v2) const {
  check_point(R, v1, v2);
  auto L = [&](double a, double b) {
    const double f = norm(R, a, b);
    return f * f / 2;
  };
  const double L0 = L(v1, v2);
  auto second = [&](double h) {
    std::array<double, 3> g{};
    g[0] = (L(v1 + h, v2) - 2 * L0 + L(v1 - h, v2)) / (h * h);
    g[2] = (L(v1, v2 + h) - 2 * L0 + L(v1, v2 - h)) / (h * h);
    g[1] = (L(v1 + h, v2 + h) - L(v1 + h, v2 - h) - L(v1 - h, v2 + h) + L(v1 - h, v2 - h)) / (4 * h * h);
    return g;
  };
  const double h = kHessianStep * std::hypot(v1, v2);
  const auto coarse = second(h);
  const auto fine = second(h / 2);

  FiberHessian out;
  std::array<double, 3> g{};
  for (int i = 0; i < 3; ++i) {
    g[i] = (4 * fine[i] - coarse[i]) / 3;
    out.error_estimate = std::max(out.error_estimate, std::abs(g[i] - fine[i]));
  }
  out.g11 = g[0];
  out.g12 = g[1];
  out.g22 = g[2];
  const double mean = (g[0] + g[2]) / 2;
  const double radius = std::hypot((g[0] - g[2]) / 2, g[1]);
  out.eig_max = mean + radius;
  // Product over sum keeps the small eigenvalue accurate when it is tiny.
  const double det = g[0] * g[2] - g[1] * g[1];
  out.eig_min = out.eig_max > 0 ? det / out.eig_max : mean - radius;
  if (!(out.eig_min > 0)) {
    std::ostringstream msg;
    msg << "hessian: not positive definite at eps = " << epsilon_ << ", R = " << R << ", v = (" << v1 << ", "
        << v2 << "), eigenvalues " << out.eig_min << ", " << out.eig_max;
    throw ConvexityViolation(msg.str());
  }
  return out;
}

double FinslerMetric::homogeneity_defect(double R, double v1, double v2, double lambda) const {
  if (!(lambda > 0)) throw DomainError("homogeneity_defect: lambda must be positive");
  const double base = evaluate(R, v1, v2).F;
  const double scaled = evaluate(R, lambda * v1, lambda * v2).F;
  return std::abs(scaled - lambda * base) / (lambda * base);
}

CurvatureResult FinslerMetric::flag_curvature(double R, double theta, double v1, double v2,
                                              const DifferenceSteps& steps) const {
  check_point(R, v1, v2);
  // The metric varies on the length cos R in the base, and a unit vector has
  // components of size 1 and 1 / cos R in the fiber; steps follow those lengths.
  const double cosR = std::cos(R);
  const double F0 = norm(R, v1, v2);
  const StencilScales scales{cosR, 1, F0, F0 / cosR};
  const double reach = (steps.inner + steps.outer) * cosR;
  if (!(std::abs(R) + reach <= std::numbers::pi / 2 - chart_margin_)) {
    std::ostringstream msg;
    msg << "flag_curvature: stencil around R = " << R << " (reach " << reach << ") leaves the chart";
    throw DomainError(msg.str());
  }
  const FinslerFunction F = [this](const Vec2& x, const Vec2& y) { return norm(x[0], y[0], y[1]); };
  return flag_curvature_2d(F, {R, theta}, {v1, v2}, steps, scales);
}

}  // namespace zf::finsler
