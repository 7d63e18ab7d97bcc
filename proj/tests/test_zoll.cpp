#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "zf/errors.hpp"
#include "zf/geodesic.hpp"
#include "zf/zoll.hpp"

using namespace zf::zoll;
using std::numbers::pi;

TEST_SUITE("zoll") {

TEST_CASE("profile value and slope") {
  auto v = h_eval(HParam(0.1), 0.5);
  CHECK(v.h == doctest::Approx(0.0375).epsilon(1e-14));
  CHECK(v.dh == doctest::Approx(0.025).epsilon(1e-14));
  auto w = h_eval(HParam(0.5, 2), 0.5);
  CHECK(w.h == doctest::Approx(0.5 * 0.5 * 0.75 * 0.75).epsilon(1e-14));
  CHECK_THROWS_AS(h_eval(HParam(0.1), 1.5), zf::DomainError);
}

TEST_CASE("admissible epsilon ranges") {
  CHECK_THROWS_AS(HParam(0.5), zf::DomainError);
  CHECK_THROWS_AS(HParam(0.0), zf::DomainError);
  CHECK_THROWS_AS(HParam(-0.1), zf::DomainError);
  CHECK_NOTHROW(HParam(0.49));
  CHECK_NOTHROW(HParam(1.0, 2));
  CHECK_THROWS_AS(HParam(1.01, 2), zf::DomainError);
  CHECK_THROWS_AS(HParam(0.2, 0), zf::DomainError);
}

TEST_CASE("curvature on the equator and at the poles") {
  for (double eps : {0.1, 0.25, 0.49}) {
    CHECK(gauss_curvature(HParam(eps), 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    // h(+-1) = 0 and h'(+-1) = -2 eps, so G = 1 +- 2 eps
    CHECK(gauss_curvature(HParam(eps), 1.0) == doctest::Approx(1 + 2 * eps).epsilon(1e-15));
    CHECK(gauss_curvature(HParam(eps), -1.0) == doctest::Approx(1 - 2 * eps).epsilon(1e-15));
  }
}

TEST_CASE("curvature agrees with a finite-difference oracle") {
  for (int n : {1, 2, 3}) {
    for (double eps : {0.05, 0.25, 0.45}) {
      HParam p(eps, n);
      ZollSurface s(p);
      for (double r = 0.1; r < pi - 0.05; r += 0.1) {
        auto f = [&](long double t) { return oracle::zoll_factor(eps, n, t); };
        CAPTURE(n); CAPTURE(eps); CAPTURE(r);
        CHECK(s.curvature(r) == doctest::Approx(oracle::revolution_curvature(f, r)).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("specialised and general curvature forms agree") {
  oracle::Gen g(1);
  for (int i = 0; i < 2000; ++i) {
    const double eps = g.uniform(1e-6, 0.4999), x = g.uniform(-1, 1);
    HParam p(eps);
    CHECK(gauss_curvature_cubic(eps, x) == doctest::Approx(gauss_curvature_general(p, x)).epsilon(1e-12));
  }
}

TEST_CASE("curvature stays positive across the admissible range") {
  for (double eps : {0.01, 0.25, 0.4999}) {
    auto rep = darboux_check(HParam(eps), 2001);
    CHECK(rep.all_passed());
    CHECK(rep.min_curvature > 0);
  }
  auto second = darboux_check(HParam(1.0, 2), 2001);
  CHECK(second.all_passed());
}

TEST_CASE("ambient form matches the chart metric") {
  ZollSurface s{HParam(0.3)};
  for (double r = 0.2; r < pi; r += 0.3) {
    const double z = std::cos(r);
    // g_rr = 1 + phi(z) sin^2 r
    CHECK(s.g_rr(r) == doctest::Approx(1 + s.ambient_phi(z) * std::sin(r) * std::sin(r)).epsilon(1e-13));
    const double d = 1e-6;
    const double fd = (s.ambient_phi(z + d) - s.ambient_phi(z - d)) / (2 * d);
    CHECK(s.ambient_phi_derivative(z) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("equator closes after 2 pi and not after pi") {
  ZollSurface s{HParam(0.25)};
  auto init = unit_state(s, pi / 2, 0, pi / 2);
  auto full = integrate_geodesic(s, init, 2 * pi, 1e-3);
  CHECK(closure_defect(full) < 1e-9);
  auto half = integrate_geodesic(s, init, pi, 1e-3);
  CHECK(closure_defect(half) == doctest::Approx(pi).epsilon(1e-8));
}

TEST_CASE("oblique geodesics close with period 2 pi") {
  for (double eps : {0.1, 0.4}) {
    ZollSurface s{HParam(eps)};
    for (double heading : {0.3, 1.0, 2.0}) {
      auto init = unit_state(s, 1.1, 0.4, heading);
      auto traj = integrate_geodesic(s, init, 2 * pi, 1e-3);
      CAPTURE(eps); CAPTURE(heading);
      CHECK(closure_defect(traj) < 1e-6);
      CHECK(std::abs(clairaut(traj.back()) - clairaut(init)) < 1e-9);
      CHECK(std::abs(speed_squared(s, traj.back()) - 1) < 1e-9);
      auto ret = integrate_geodesic(s, init, 2 * pi + 0.05, 1e-3);
      auto L = first_return_length(ret, pi);
      REQUIRE(L.has_value());
      CHECK(*L == doctest::Approx(2 * pi).epsilon(1e-5));
    }
  }
}

TEST_CASE("meridian through both poles") {
  ZollSurface s{HParam(0.3)};
  auto init = unit_state(s, 1.0, 0.0, 0.0);
  auto traj = integrate_geodesic(s, init, 2 * pi, 1e-3);
  CHECK(closure_defect(traj) < 1e-8);
}

TEST_CASE("single-state trajectory has no defect") {
  zf::zoll::Trajectory t{GeodesicState{1, 2, 0, 1, 0}};
  CHECK(closure_defect(t) == 0.0);
}

TEST_CASE("integrator rejects bad arguments") {
  ZollSurface s{HParam(0.25)};
  auto init = unit_state(s, 1.0, 0.0, 0.5);
  CHECK_THROWS_AS(integrate_geodesic(s, init, 1.0, 0.0), zf::DomainError);
  CHECK_THROWS_AS(integrate_geodesic(s, init, -1.0, 1e-3), zf::DomainError);
  auto slow = init;
  slow.r_dot *= 2;
  CHECK_THROWS_AS(integrate_geodesic(s, slow, 1.0, 1e-3), zf::DomainError);
}

}  // TEST_SUITE
