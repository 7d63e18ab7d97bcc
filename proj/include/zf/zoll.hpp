#pragma once

// The Riemannian side: the Zoll metric of revolution
//
//   g = (1 + h(cos r))^2 dr^2 + sin^2 r dtheta^2,   (r, theta) in [0, pi] x [0, 2 pi),
//
// for the odd profile h(x) = eps * x * (1 - x^2)^n.

#include <string>
#include <vector>

namespace zf::zoll {

/// Profile h(x) = epsilon * x * (1 - x^2)^n.  For n = 1 the admissible range is
/// 0 < epsilon < 1/2; for n >= 2 we accept 0 < epsilon <= 1 (n >= 2 with
/// epsilon = 1 is the second admissible family).
class HParam {
 public:
  explicit HParam(double epsilon, int exponent = 1);

  double epsilon() const noexcept { return epsilon_; }
  int exponent() const noexcept { return exponent_; }

 private:
  double epsilon_;
  int exponent_;
};

struct HValue {
  double h;
  double dh;  // h'(x)
};

/// h and h' at x in [-1, 1]; DomainError otherwise.
HValue h_eval(const HParam& p, double x);

/// Gauss curvature at x = cos r.  For n = 1 this is the specialised rational
/// form (1 + 2 eps x^3) / (1 + eps x - eps x^3)^3; otherwise the general formula.
double gauss_curvature(const HParam& p, double x);

/// (1 + h - x h') / (1 + h)^3 evaluated through h_eval, for any exponent.
double gauss_curvature_general(const HParam& p, double x);

/// Specialised n = 1 curvature written directly in eps and x.
double gauss_curvature_cubic(double epsilon, double x);

struct ConditionCheck {
  std::string name;
  bool passed = false;
  double margin = 0;  // worst case over the grid; positive means satisfied
};

struct DarbouxReport {
  std::vector<ConditionCheck> checks;  // oddness, endpoints, |h| < 1, G > 0
  double min_curvature = 0;
  double max_curvature = 0;

  bool all_passed() const;
};

/// Checks the admissibility conditions of h on a uniform grid of [-1, 1].
DarbouxReport darboux_check(const HParam& p, int grid_size);

/// Metric of revolution built on an HParam.
class ZollSurface {
 public:
  explicit ZollSurface(HParam h) : h_(h) {}

  const HParam& profile() const noexcept { return h_; }

  /// f(r) = 1 + h(cos r); g_rr = f^2.
  double radial_factor(double r) const;
  /// df/dr = -sin r h'(cos r).
  double radial_factor_derivative(double r) const;

  double g_rr(double r) const;
  double g_thth(double r) const;

  /// Gauss curvature at the point with polar angle r.
  double curvature(double r) const;

  /// phi(z) and phi'(z) for the ambient form g = round + phi(z) dz^2 on the unit
  /// sphere, phi = (2 h + h^2) / (1 - z^2) (a polynomial in z).
  double ambient_phi(double z) const;
  double ambient_phi_derivative(double z) const;

 private:
  HParam h_;
};

}  // namespace zf::zoll
