#include "zf/zoll.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zf/errors.hpp"

namespace zf::zoll {

namespace {

constexpr double kIdentityTolerance = 1e-14;

double ipow(double base, int n) {
  double out = 1;
  for (int i = 0; i < n; ++i) out *= base;
  return out;
}

void require_unit_interval(double x, const char* who) {
  if (!(std::abs(x) <= 1)) {
    std::ostringstream msg;
    msg << who << ": x = " << x << " outside [-1, 1]";
    throw DomainError(msg.str());
  }
}

}  // namespace

HParam::HParam(double epsilon, int exponent) : epsilon_(epsilon), exponent_(exponent) {
  if (exponent < 1) throw DomainError("HParam: exponent must be >= 1");
  if (!std::isfinite(epsilon) || epsilon <= 0) throw DomainError("HParam: epsilon must be positive");
  if (exponent == 1 && !(epsilon < 0.5)) throw DomainError("HParam: n = 1 requires 0 < epsilon < 1/2");
  if (exponent > 1 && epsilon > 1) throw DomainError("HParam: n >= 2 requires 0 < epsilon <= 1");
}

HValue h_eval(const HParam& p, double x) {
  require_unit_interval(x, "h_eval");
  const int n = p.exponent();
  const double eps = p.epsilon();
  const double w = 1 - x * x;
  const double wn1 = ipow(w, n - 1);
  return {eps * x * (wn1 * w), eps * (wn1 * w - 2 * n * x * x * wn1)};
}

double gauss_curvature_cubic(double epsilon, double x) {
  require_unit_interval(x, "gauss_curvature");
  const double x3 = x * x * x;
  const double den = epsilon * x3 - epsilon * x - 1;  // -(1 + h(x))
  return -(2 * epsilon * x3 + 1) / (den * den * den);
}

double gauss_curvature_general(const HParam& p, double x) {
  const auto [h, dh] = h_eval(p, x);
  const double f = 1 + h;
  return (1 + h - x * dh) / (f * f * f);
}

double gauss_curvature(const HParam& p, double x) {
  if (p.exponent() == 1) return gauss_curvature_cubic(p.epsilon(), x);
  return gauss_curvature_general(p, x);
}

bool DarbouxReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ConditionCheck& c) { return c.passed; });
}

DarbouxReport darboux_check(const HParam& p, int grid_size) {
  if (grid_size < 3) throw DomainError("darboux_check: grid_size must be >= 3");

  double odd_defect = 0;
  double max_abs_h = 0;
  double min_g = HUGE_VAL;
  double max_g = -HUGE_VAL;
  for (int i = 0; i < grid_size; ++i) {
    const double x = -1 + 2.0 * i / (grid_size - 1);
    const double h = h_eval(p, x).h;
    odd_defect = std::max(odd_defect, std::abs(h + h_eval(p, -x).h));
    max_abs_h = std::max(max_abs_h, std::abs(h));
    const double g = gauss_curvature(p, x);
    min_g = std::min(min_g, g);
    max_g = std::max(max_g, g);
  }
  const double end_defect = std::max(std::abs(h_eval(p, 1).h), std::abs(h_eval(p, -1).h));

  DarbouxReport r;
  r.min_curvature = min_g;
  r.max_curvature = max_g;
  r.checks.push_back({"odd", odd_defect <= kIdentityTolerance, kIdentityTolerance - odd_defect});
  r.checks.push_back({"endpoints", end_defect <= kIdentityTolerance, kIdentityTolerance - end_defect});
  r.checks.push_back({"bounded", max_abs_h < 1, 1 - max_abs_h});
  r.checks.push_back({"curvature_positive", min_g > 0, min_g});
  return r;
}

double ZollSurface::radial_factor(double r) const { return 1 + h_eval(h_, std::cos(r)).h; }

double ZollSurface::radial_factor_derivative(double r) const {
  return -std::sin(r) * h_eval(h_, std::cos(r)).dh;
}

double ZollSurface::g_rr(double r) const {
  const double f = radial_factor(r);
  return f * f;
}

double ZollSurface::g_thth(double r) const {
  const double s = std::sin(r);
  return s * s;
}

double ZollSurface::curvature(double r) const { return gauss_curvature(h_, std::cos(r)); }

double ZollSurface::ambient_phi(double z) const {
  // (2h + h^2) / (1 - z^2) = eps k (2 + eps m),  k = z w^(n-1),  m = z w^n.
  const int n = h_.exponent();
  const double eps = h_.epsilon();
  const double w = 1 - z * z;
  const double k = z * ipow(w, n - 1);
  const double m = k * w;
  return eps * k * (2 + eps * m);
}

double ZollSurface::ambient_phi_derivative(double z) const {
  const int n = h_.exponent();
  const double eps = h_.epsilon();
  const double w = 1 - z * z;
  const double k = z * ipow(w, n - 1);
  const double m = k * w;
  const double dk = n == 1 ? 1.0 : ipow(w, n - 1) - 2.0 * (n - 1) * z * z * ipow(w, n - 2);
  const double dm = ipow(w, n) - 2.0 * n * z * z * ipow(w, n - 1);
  return eps * dk * (2 + eps * m) + eps * eps * k * dm;
}

}  // namespace zf::zoll
