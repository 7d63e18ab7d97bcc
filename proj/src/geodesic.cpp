#include "zf/geodesic.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "zf/errors.hpp"

namespace zf::zoll {

namespace {

using Vec4 = std::array<double, 4>;
using Vec6 = std::array<double, 6>;  // position on S^2 and velocity, both in R^3

template <std::size_t N>
std::array<double, N> axpy(const std::array<double, N>& y, double a, const std::array<double, N>& x) {
  std::array<double, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = y[i] + a * x[i];
  return out;
}

template <std::size_t N, class Rhs>
std::array<double, N> rk4(const std::array<double, N>& y, double h, Rhs&& rhs) {
  const auto k1 = rhs(y);
  const auto k2 = rhs(axpy(y, h / 2, k1));
  const auto k3 = rhs(axpy(y, h / 2, k2));
  const auto k4 = rhs(axpy(y, h, k3));
  std::array<double, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = y[i] + h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  return out;
}

// Geodesic equations of f(r)^2 dr^2 + sin^2 r dtheta^2 in (r, theta, r', theta').
Vec4 chart_rhs(const ZollSurface& s, const Vec4& y) {
  const double r = y[0], rd = y[2], td = y[3];
  const double f = s.radial_factor(r);
  const double fr = s.radial_factor_derivative(r);
  const double sr = std::sin(r), cr = std::cos(r);
  return {rd, td, (-f * fr * rd * rd + sr * cr * td * td) / (f * f), -2 * cr / sr * rd * td};
}

// Geodesics of |dp|^2 + phi(z) dz^2 restricted to |p| = 1, with the constraint
// force lambda p fixed by p . p'' = -|p'|^2.
Vec6 ambient_rhs(const ZollSurface& s, const Vec6& y) {
  const double x = y[0], yy = y[1], z = y[2];
  const double ux = y[3], uy = y[4], uz = y[5];
  const double phi = s.ambient_phi(z);
  const double dphi = s.ambient_phi_derivative(z);
  const double inv = 1 / (1 + phi);
  const double u2 = ux * ux + uy * uy + uz * uz;
  const double p2 = x * x + yy * yy + z * z;
  const double pgp = p2 - phi * inv * z * z;  // p . G^{-1} p
  const double force = 0.5 * dphi * uz * uz;
  const double lambda = (-u2 + force * z * inv) / pgp;
  // p'' = lambda G^{-1} p - force G^{-1} e_z,  G^{-1} = I - phi/(1+phi) e_z e_z^T
  return {ux, uy, uz, lambda * x, lambda * yy, lambda * z * inv - force * inv};
}

Vec6 to_ambient(const Vec4& y) {
  const double r = y[0], th = y[1], rd = y[2], td = y[3];
  const double sr = std::sin(r), cr = std::cos(r), st = std::sin(th), ct = std::cos(th);
  return {sr * ct,
          sr * st,
          cr,
          rd * cr * ct - td * sr * st,
          rd * cr * st + td * sr * ct,
          -rd * sr};
}

Vec4 to_chart(const Vec6& y, double theta_ref) {
  const double x = y[0], yy = y[1], z = y[2];
  const double ux = y[3], uy = y[4], uz = y[5];
  const double rho2 = x * x + yy * yy;
  const double rho = std::sqrt(rho2);
  const double r = std::atan2(rho, z);
  if (rho < 1e-150) {
    // Exactly at a pole: theta is arbitrary, keep the previous value.
    const double speed = std::hypot(ux, uy);
    return {r, theta_ref, z > 0 ? speed : -speed, 0};
  }
  const double theta = theta_ref + std::remainder(std::atan2(yy, x) - theta_ref, 2 * std::numbers::pi);
  const double rho_dot = (x * ux + yy * uy) / rho;
  const double r_dot = (z * rho_dot - rho * uz) / (rho2 + z * z);
  const double theta_dot = (x * uy - yy * ux) / rho2;
  return {r, theta, r_dot, theta_dot};
}

}  // namespace

GeodesicState unit_state(const ZollSurface& s, double r, double theta, double heading) {
  const double sr = std::sin(r);
  if (!(sr > 0)) throw DomainError("unit_state: r must lie strictly between the poles");
  return {r, theta, std::cos(heading) / s.radial_factor(r), std::sin(heading) / sr, 0};
}

double speed_squared(const ZollSurface& s, const GeodesicState& st) {
  const double f = s.radial_factor(st.r);
  const double sr = std::sin(st.r);
  return f * f * st.r_dot * st.r_dot + sr * sr * st.theta_dot * st.theta_dot;
}

double clairaut(const GeodesicState& st) {
  const double sr = std::sin(st.r);
  return sr * sr * st.theta_dot;
}

Trajectory integrate_geodesic(const ZollSurface& s, const GeodesicState& init, double length,
                              double step, const IntegratorOptions& opts) {
  if (!std::isfinite(length) || length < 0) throw DomainError("integrate_geodesic: length must be >= 0");
  if (!(step > 0 && step <= 1e-2)) throw DomainError("integrate_geodesic: step must lie in (0, 1e-2]");
  const double v2 = speed_squared(s, init);
  if (!(std::abs(v2 - 1) <= opts.unit_speed_tolerance)) {
    std::ostringstream msg;
    msg << "integrate_geodesic: initial state is not unit speed (g(v,v) = " << v2 << ")";
    throw DomainError(msg.str());
  }

  const auto n = static_cast<std::size_t>(std::ceil(length / step - 1e-9));
  Trajectory traj;
  traj.reserve(n + 1);
  traj.push_back(init);
  if (n == 0) return traj;
  const double h = length / static_cast<double>(n);

  // Hysteresis on the chart switch so that a geodesic grazing the cap boundary
  // does not bounce between representations every step.
  const double leave_cap = 1.2 * opts.pole_switch;
  Vec4 chart{init.r, init.theta, init.r_dot, init.theta_dot};
  bool in_cap = std::sin(init.r) < opts.pole_switch;
  Vec6 ambient{};
  if (in_cap) ambient = to_ambient(chart);

  for (std::size_t k = 1; k <= n; ++k) {
    if (in_cap) {
      ambient = rk4(ambient, h, [&](const Vec6& y) { return ambient_rhs(s, y); });
      chart = to_chart(ambient, chart[1]);
      if (std::sin(chart[0]) > leave_cap) in_cap = false;
    } else {
      chart = rk4(chart, h, [&](const Vec4& y) { return chart_rhs(s, y); });
      if (std::sin(chart[0]) < opts.pole_switch) {
        in_cap = true;
        ambient = to_ambient(chart);
      }
    }
    traj.push_back({chart[0], chart[1], chart[2], chart[3], init.arclength + h * static_cast<double>(k)});
  }
  return traj;
}

double state_distance(const GeodesicState& a, const GeodesicState& b) {
  const double dr = a.r - b.r;
  const double dth = std::remainder(a.theta - b.theta, 2 * std::numbers::pi);
  const double drd = a.r_dot - b.r_dot;
  const double dtd = a.theta_dot - b.theta_dot;
  return std::sqrt(dr * dr + dth * dth + drd * drd + dtd * dtd);
}

double closure_defect(const Trajectory& traj) {
  if (traj.empty()) throw DomainError("closure_defect: empty trajectory");
  return state_distance(traj.front(), traj.back());
}

std::optional<double> first_return_length(const Trajectory& traj, double min_length, double threshold) {
  if (traj.size() < 3) return std::nullopt;
  const auto& start = traj.front();
  auto d2 = [&](std::size_t k) {
    const double d = state_distance(start, traj[k]);
    return d * d;
  };
  for (std::size_t k = 1; k + 1 < traj.size(); ++k) {
    if (traj[k].arclength - start.arclength < min_length) continue;
    const double y0 = d2(k - 1), y1 = d2(k), y2 = d2(k + 1);
    if (!(y1 <= y0 && y1 <= y2) || y1 > threshold * threshold) continue;
    // Vertex of the parabola through the three samples (equally spaced).
    const double h = traj[k + 1].arclength - traj[k].arclength;
    const double curvature = y0 - 2 * y1 + y2;
    const double offset = curvature > 0 ? 0.5 * h * (y0 - y2) / curvature : 0.0;
    return traj[k].arclength - start.arclength + offset;
  }
  return std::nullopt;
}

}  // namespace zf::zoll
