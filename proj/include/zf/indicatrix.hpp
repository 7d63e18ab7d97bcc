#pragma once

// The indicatrix of the K = 1 Finsler metric on the manifold of geodesics of
// the Zoll surface with h(x) = eps x (1 - x^2).
//
// A point of the manifold of geodesics has coordinates (R, theta); c = sin R is
// the Clairaut constant of the geodesic.  The fiber coordinates (v1, v2) are
// components along d/dR and d/dtheta.  The indicatrix at (R, theta) is the image
// of the geodesic itself, parametrised by its polar angle r in [|R|, pi - |R|]
// with two branches for the sign of v1.

#include <vector>

#include "zf/polyroots.hpp"

namespace zf::indicatrix {

/// Point (R, theta) of the manifold of geodesics together with a fiber vector.
struct TangentSample {
  double R = 0;
  double theta = 0;
  double v1 = 0;
  double v2 = 0;

  double c() const;
  /// Throws DomainError unless |R| <= pi/2 - margin and (v1, v2) != 0.
  void validate(double margin = 1e-3) const;
};

/// The five coefficients of A F^4 + B F^3 + C F^2 + D F + E = 0, whose positive
/// root is F(R; v1, v2).
struct QuarticCoeffs {
  double A = 0, B = 0, C = 0, D = 0, E = 0;

  poly::Quartic polynomial() const { return {A, B, C, D, E}; }
};

enum class Branch { plus, minus };

struct FiberPoint {
  double v1 = 0;
  double v2 = 0;
};

/// sin^2 r - sin^2 R, computed as sin(r - R) sin(r + R); negative values down
/// to -1e-15 are clamped to zero.
double turning_gap(double R, double r);

/// v2 = cos r / cos^2 R - eps (sin^2 r - c^2) + eps c^2.
double v2_closed_form(double epsilon, double R, double r);

/// v2 from the integral representation of the indicatrix,
///   (1 + h(cos r)) / cos r - sqrt(sin^2 r - c^2) * I(r),
/// with I(r) evaluated by quadrature.  Requires cos r != 0.
double v2_integral_form(double epsilon, double R, double r);

/// (v1, v2) = (+-sqrt(sin^2 r - c^2) / cos R, v2_closed_form).
FiberPoint indicatrix_point(double epsilon, double R, double r, Branch branch);

/// The integral I(r) = int_{|R|}^{r} sin s / cos^2 s * (1 + 2 eps cos^3 s) / sqrt(sin^2 s - c^2) ds
/// two ways.  For r beyond pi/2 the integrand has a double pole with zero
/// residue at s = pi/2; the quadrature then runs along a contour through the
/// upper half plane, which yields the analytic continuation the closed form
/// represents.
struct TurningIntegral {
  double closed_form = 0;
  double quadrature = 0;
  double quadrature_error = 0;

  double discrepancy() const;
};

/// Closed form (1/cos^2 R)[sqrt(S)/cos r (1 + 2 eps cos^3 r) + 2 eps S^{3/2}],  S = sin^2 r - c^2.
double turning_integral_closed(double epsilon, double R, double r);
double turning_integral_quadrature(double epsilon, double R, double r, double* error_estimate = nullptr);
TurningIntegral turning_integral(double epsilon, double R, double r);

/// (1 - v1^2) / cos^2 R - (v2 + eps v1^2 cos^2 R - eps c^2)^2.
double implicit_residual(double epsilon, double R, double v1, double v2);

QuarticCoeffs quartic_coefficients(double epsilon, double R, double v1, double v2);

struct CurvePoint {
  double r = 0;
  double v1 = 0;
  double v2 = 0;
};

/// Closed indicatrix polyline: the plus branch from r = |R| to pi - |R|, then the
/// minus branch back, `per_branch` interior samples each, plus the two exact
/// v1 = 0 vertices.  The first vertex is not repeated at the end.
std::vector<CurvePoint> sample_curve(double epsilon, double R, int per_branch);

struct ConvexityReport {
  bool simple_convex = false;     // all turns of one sign, total turning 2 pi
  bool encloses_origin = false;   // winding number +-1 about 0
  double total_turning = 0;       // signed, radians
  double min_turn = 0;            // smallest |exterior angle| observed
};

ConvexityReport curve_convexity(const std::vector<CurvePoint>& polyline);

}  // namespace zf::indicatrix
