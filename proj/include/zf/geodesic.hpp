#pragma once

#include <optional>
#include <vector>

#include "zf/zoll.hpp"

namespace zf::zoll {

/// A point of the unit tangent bundle in chart coordinates, tagged with arclength.
struct GeodesicState {
  double r = 0;
  double theta = 0;  // unwrapped along a trajectory
  double r_dot = 0;
  double theta_dot = 0;
  double arclength = 0;
};

using Trajectory = std::vector<GeodesicState>;

struct IntegratorOptions {
  /// Inside the polar caps sin r < pole_switch the integrator leaves the
  /// (r, theta) chart and advances the geodesic on the unit sphere in R^3,
  /// where the metric reads round + phi(z) dz^2 and has no coordinate singularity.
  double pole_switch = 0.1;
  /// Allowed |g(v, v) - 1| for the initial state.
  double unit_speed_tolerance = 1e-9;
};

/// Unit-speed state at (r, theta) whose direction makes angle `heading` with d/dr.
GeodesicState unit_state(const ZollSurface& s, double r, double theta, double heading);

/// g(v, v) for the velocity part of the state.
double speed_squared(const ZollSurface& s, const GeodesicState& st);

/// sin^2 r * theta_dot, conserved along geodesics.
double clairaut(const GeodesicState& st);

/// Fixed-step classical RK4 in arclength.  The step actually used is
/// length / ceil(length / step) <= step; the trajectory holds every state from
/// s = 0 to s = length inclusive.
Trajectory integrate_geodesic(const ZollSurface& s, const GeodesicState& init, double length,
                              double step, const IntegratorOptions& opts = {});

/// Distance in (r, theta mod 2 pi, r_dot, theta_dot) between two states, theta on the circle.
double state_distance(const GeodesicState& a, const GeodesicState& b);

/// state_distance(first, last); zero for a single-state trajectory.
double closure_defect(const Trajectory& traj);

/// Arclength of the first return of the state to its initial value: the first
/// local minimum of the closure defect beyond `min_length` that falls below
/// `threshold`, located to sub-step accuracy with a parabola through the squared
/// defect.  Empty if the trajectory never comes back.
std::optional<double> first_return_length(const Trajectory& traj, double min_length,
                                          double threshold = 1e-2);

}  // namespace zf::zoll
