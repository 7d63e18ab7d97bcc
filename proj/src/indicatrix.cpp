#include "zf/indicatrix.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "zf/errors.hpp"
#include "zf/quadrature.hpp"

namespace zf::indicatrix {

namespace {

using Complex = std::complex<double>;
constexpr double kHalfPi = std::numbers::pi / 2;

void require_epsilon(double eps, const char* who) {
  if (!(eps >= 0 && eps < 0.5)) {
    std::ostringstream msg;
    msg << who << ": epsilon = " << eps << " outside [0, 1/2)";
    throw DomainError(msg.str());
  }
}

void require_chart(double R, const char* who) {
  if (!(std::abs(R) < kHalfPi)) {
    std::ostringstream msg;
    msg << who << ": |R| = " << std::abs(R) << " must be < pi/2";
    throw DomainError(msg.str());
  }
}

// r must lie on the geodesic's excursion [|R|, pi - |R|].
void require_reachable(double R, double r, const char* who) {
  const double Ra = std::abs(R);
  if (!(r >= Ra && r <= std::numbers::pi - Ra)) {
    std::ostringstream msg;
    msg << who << ": r = " << r << " outside the turning range [" << Ra << ", " << std::numbers::pi - Ra
        << "] (sin^2 r < sin^2 R)";
    throw DomainError(msg.str());
  }
}

}  // namespace

double TangentSample::c() const { return std::sin(R); }

void TangentSample::validate(double margin) const {
  if (!(std::abs(R) <= kHalfPi - margin)) throw DomainError("TangentSample: |R| exceeds pi/2 - margin");
  if (!std::isfinite(v1) || !std::isfinite(v2)) throw DomainError("TangentSample: non-finite fiber vector");
  if (v1 == 0 && v2 == 0) throw DomainError("TangentSample: zero fiber vector");
}

double turning_gap(double R, double r) {
  const double Ra = std::abs(R);
  const double S = std::sin(r - Ra) * std::sin(r + Ra);
  if (S < 0 && S >= -1e-15) return 0;
  return S;
}

double v2_closed_form(double epsilon, double R, double r) {
  require_epsilon(epsilon, "v2_closed_form");
  require_chart(R, "v2_closed_form");
  require_reachable(R, r, "v2_closed_form");
  const double c = std::sin(R);
  const double cosR = std::cos(R);
  const double S = turning_gap(R, r);
  return std::cos(r) / (cosR * cosR) - epsilon * S + epsilon * c * c;
}

FiberPoint indicatrix_point(double epsilon, double R, double r, Branch branch) {
  const double v2 = v2_closed_form(epsilon, R, r);
  const double v1 = std::sqrt(turning_gap(R, r)) / std::cos(R);
  return {branch == Branch::plus ? v1 : -v1, v2};
}

double turning_integral_closed(double epsilon, double R, double r) {
  require_epsilon(epsilon, "turning_integral");
  require_chart(R, "turning_integral");
  require_reachable(R, r, "turning_integral");
  const double S = turning_gap(R, r);
  const double cosR = std::cos(R);
  const double cr = std::cos(r);
  const double root = std::sqrt(S);
  return (root / cr * (1 + 2 * epsilon * cr * cr * cr) + 2 * epsilon * S * root) / (cosR * cosR);
}

double turning_integral_quadrature(double epsilon, double R, double r, double* error_estimate) {
  require_epsilon(epsilon, "turning_integral");
  require_chart(R, "turning_integral");
  require_reachable(R, r, "turning_integral");
  const double Ra = std::abs(R);
  if (error_estimate) *error_estimate = 0;
  if (r == Ra) return 0;

  // Integrand written in t = s - |R|:  sin^2 s - sin^2 R = sin(t) sin(2|R| + t).
  auto integrand = [epsilon, Ra](Complex s, Complex t) {
    const Complex cs = std::cos(s);
    const Complex S = std::sin(t) * std::sin(2 * Ra + t);
    return std::sin(s) / (cs * cs) * (1.0 + 2 * epsilon * cs * cs * cs) / std::sqrt(S);
  };
  auto from_start = [&](Complex s, Complex offset) { return integrand(s, offset); };
  auto away_from_start = [&](Complex s, Complex) { return integrand(s, s - Ra); };

  const double rho = 0.5 * (kHalfPi - Ra);
  double value = 0;
  double err = 0;
  if (r < kHalfPi - rho) {
    const auto res = quad::tanh_sinh(from_start, Ra, r);
    value = res.value.real();
    err = res.error_estimate;
  } else {
    // Detour around the double pole at pi/2 (zero residue) through the upper half plane.
    const Complex a = kHalfPi - rho;
    const Complex apex(kHalfPi, rho);
    const auto s1 = quad::tanh_sinh(from_start, Ra, a);
    const auto s2 = quad::tanh_sinh(away_from_start, a, apex);
    const auto s3 = quad::tanh_sinh(away_from_start, apex, r);
    value = (s1.value + s2.value + s3.value).real();
    err = s1.error_estimate + s2.error_estimate + s3.error_estimate;
  }
  if (error_estimate) *error_estimate = err;
  return value;
}

double TurningIntegral::discrepancy() const { return std::abs(closed_form - quadrature); }

TurningIntegral turning_integral(double epsilon, double R, double r) {
  TurningIntegral out;
  out.closed_form = turning_integral_closed(epsilon, R, r);
  out.quadrature = turning_integral_quadrature(epsilon, R, r, &out.quadrature_error);
  return out;
}

double v2_integral_form(double epsilon, double R, double r) {
  require_reachable(R, r, "v2_integral_form");
  const double cr = std::cos(r);
  if (std::abs(cr) < 1e-12) throw DomainError("v2_integral_form: cos r = 0, the representation is singular");
  const double sr = std::sin(r);
  const double head = (1 + epsilon * sr * sr * cr) / cr;
  return head - std::sqrt(turning_gap(R, r)) * turning_integral_quadrature(epsilon, R, r);
}

double implicit_residual(double epsilon, double R, double v1, double v2) {
  require_chart(R, "implicit_residual");
  const double c = std::sin(R);
  const double cosR = std::cos(R);
  const double K = cosR * cosR;
  const double inner = v2 + epsilon * v1 * v1 * K - epsilon * c * c;
  return (1 - v1 * v1) / K - inner * inner;
}

QuarticCoeffs quartic_coefficients(double epsilon, double R, double v1, double v2) {
  require_chart(R, "quartic_coefficients");
  const double c = std::sin(R);
  const double c2 = c * c;
  const double cosR = std::cos(R);
  const double K = cosR * cosR;  // 1 - c^2
  const double e2 = epsilon * epsilon;
  const double v1s = v1 * v1;
  QuarticCoeffs q;
  q.A = 1 - e2 * K * c2 * c2;
  q.B = 2 * epsilon * c2 * K * v2;
  q.C = (2 * e2 * c2 * K * K - 1) * v1s - K * v2 * v2;
  q.D = -2 * epsilon * K * K * v1s * v2;
  q.E = -e2 * v1s * v1s * K * K * K;
  return q;
}

std::vector<CurvePoint> sample_curve(double epsilon, double R, int per_branch) {
  require_epsilon(epsilon, "sample_curve");
  require_chart(R, "sample_curve");
  if (per_branch < 1) throw DomainError("sample_curve: per_branch must be >= 1");
  const double Ra = std::abs(R);
  const double span = std::numbers::pi - 2 * Ra;
  const double c = std::sin(R);
  const double cosR = std::cos(R);

  std::vector<CurvePoint> out;
  out.reserve(2 * static_cast<std::size_t>(per_branch) + 2);
  out.push_back({Ra, 0, 1 / cosR + epsilon * c * c});
  for (int k = 1; k <= per_branch; ++k) {
    const double r = Ra + span * k / (per_branch + 1);
    const auto p = indicatrix_point(epsilon, R, r, Branch::plus);
    out.push_back({r, p.v1, p.v2});
  }
  out.push_back({std::numbers::pi - Ra, 0, -1 / cosR + epsilon * c * c});
  for (int k = per_branch; k >= 1; --k) {
    const double r = Ra + span * k / (per_branch + 1);
    const auto p = indicatrix_point(epsilon, R, r, Branch::minus);
    out.push_back({r, p.v1, p.v2});
  }
  return out;
}

ConvexityReport curve_convexity(const std::vector<CurvePoint>& poly) {
  ConvexityReport rep;
  const std::size_t n = poly.size();
  if (n < 3) return rep;

  int positive = 0, negative = 0;
  double turning = 0;
  double winding = 0;
  double min_turn = HUGE_VAL;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p0 = poly[i];
    const auto& p1 = poly[(i + 1) % n];
    const auto& p2 = poly[(i + 2) % n];
    const double ex = p1.v1 - p0.v1, ey = p1.v2 - p0.v2;
    const double fx = p2.v1 - p1.v1, fy = p2.v2 - p1.v2;
    const double turn = std::atan2(ex * fy - ey * fx, ex * fx + ey * fy);
    turning += turn;
    if (turn > 0) ++positive;
    if (turn < 0) ++negative;
    min_turn = std::min(min_turn, std::abs(turn));

    const double a0 = std::atan2(p0.v2, p0.v1);
    const double a1 = std::atan2(p1.v2, p1.v1);
    winding += std::remainder(a1 - a0, 2 * std::numbers::pi);
  }
  const double two_pi = 2 * std::numbers::pi;
  rep.total_turning = turning;
  rep.min_turn = min_turn;
  rep.simple_convex = (positive == 0 || negative == 0) && min_turn > 0 &&
                      std::abs(std::abs(turning) - two_pi) < 1e-9;
  rep.encloses_origin = std::abs(std::abs(winding) - two_pi) < 1e-9;
  return rep;
}

}  // namespace zf::indicatrix
