#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "zf/errors.hpp"
#include "zf/indicatrix.hpp"

using namespace zf::indicatrix;
using std::numbers::pi;

TEST_SUITE("indicatrix") {

TEST_CASE("closed-form v2 at the base of the chart") {
  CHECK(v2_closed_form(0.25, 0, 0) == doctest::Approx(1));
  CHECK(v2_closed_form(0.25, 0, pi / 2) == doctest::Approx(-0.25));
  // c = sin 0.3, r = 0.3: S = 0, v2 = cos r / cos^2 R + eps c^2
  const double c = std::sin(0.3);
  CHECK(v2_closed_form(0.1, 0.3, 0.3) == doctest::Approx(1 / std::cos(0.3) + 0.1 * c * c).epsilon(1e-14));
}

TEST_CASE("indicatrix points") {
  auto p = indicatrix_point(0.25, 0, pi / 2, Branch::plus);
  CHECK(p.v1 == doctest::Approx(1));
  CHECK(p.v2 == doctest::Approx(-0.25));
  auto m = indicatrix_point(0.25, 0, pi / 2, Branch::minus);
  CHECK(m.v1 == doctest::Approx(-1));
  auto vertex = indicatrix_point(0.25, 0.4, 0.4, Branch::plus);
  CHECK(vertex.v1 == 0.0);
}

TEST_CASE("implicit residual") {
  CHECK(implicit_residual(0.25, 0, 0, 1.5) == doctest::Approx(-1.25));
  oracle::Gen g(9);
  for (int i = 0; i < 2000; ++i) {
    const double eps = g.uniform(0, 0.49), R = g.uniform(-1.5, 1.5);
    const double r = g.uniform(std::abs(R), pi - std::abs(R));
    auto p = indicatrix_point(eps, R, r, g.coin() ? Branch::plus : Branch::minus);
    CHECK(std::abs(implicit_residual(eps, R, p.v1, p.v2)) < 1e-10);
  }
}

TEST_CASE("turning gap") {
  CHECK(turning_gap(0.3, 0.3) == 0.0);
  CHECK(turning_gap(0.0, pi / 2) == doctest::Approx(1));
  CHECK(turning_gap(0.5, 0.5 - 1e-17) >= 0.0);
}

TEST_CASE("integral at R = 0 has the elementary form tan r + 2 eps sin r") {
  for (double r : {0.2, 0.7, 1.3}) {
    CHECK(turning_integral_closed(0, 0, r) == doctest::Approx(std::tan(r)).epsilon(1e-14));
    CHECK(turning_integral_closed(0.3, 0, r) == doctest::Approx(std::tan(r) + 0.6 * std::sin(r)).epsilon(1e-14));
    CHECK(turning_integral_quadrature(0.3, 0, r) ==
          doctest::Approx(std::tan(r) + 0.6 * std::sin(r)).epsilon(1e-11));
  }
}

TEST_CASE("integral matches a brute-force Simpson oracle") {
  for (double eps : {0.0, 0.2, 0.45}) {
    for (double R : {0.2, -0.6, 1.0}) {
      for (double frac : {0.3, 0.7, 0.95}) {
        const double r = std::abs(R) + frac * (pi / 2 - 0.05 - std::abs(R));
        const double ref = oracle::indicatrix_integral(eps, R, r);
        CAPTURE(eps); CAPTURE(R); CAPTURE(r);
        CHECK(turning_integral_closed(eps, R, r) == doctest::Approx(ref).epsilon(1e-9));
        CHECK(turning_integral_quadrature(eps, R, r) == doctest::Approx(ref).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("contour quadrature continues the closed form past the equator") {
  for (double r : {1.7, 2.2, 2.9}) {
    auto a = turning_integral(0.3, 0.2, r);
    CHECK(a.discrepancy() < 1e-8 * std::max(1.0, std::abs(a.closed_form)));
  }
}

TEST_CASE("closed and integral forms of v2 agree") {
  for (double R : {0.0, 0.4, -1.0}) {
    for (double r = std::abs(R) + 0.05; r < pi - std::abs(R); r += 0.2) {
      if (std::abs(std::cos(r)) < 1e-3) continue;
      CHECK(v2_integral_form(0.25, R, r) == doctest::Approx(v2_closed_form(0.25, R, r)).epsilon(1e-9));
    }
  }
}

TEST_CASE("quartic coefficients at R = 0") {
  const double eps = 0.3, v1 = 0.7, v2 = -0.4;
  auto q = quartic_coefficients(eps, 0, v1, v2);
  CHECK(q.A == doctest::Approx(1));
  CHECK(q.B == doctest::Approx(0));
  CHECK(q.C == doctest::Approx(-v1 * v1 - v2 * v2));
  CHECK(q.D == doctest::Approx(-2 * eps * v1 * v1 * v2));
  CHECK(q.E == doctest::Approx(-eps * eps * v1 * v1 * v1 * v1));
}

TEST_CASE("quartic vanishes at F = 1 on the indicatrix") {
  oracle::Gen g(4);
  for (int i = 0; i < 1000; ++i) {
    const double eps = g.uniform(0, 0.49), R = g.uniform(-1.5, 1.5);
    const double r = g.uniform(std::abs(R), pi - std::abs(R));
    auto p = indicatrix_point(eps, R, r, Branch::plus);
    auto q = quartic_coefficients(eps, R, p.v1, p.v2);
    const double scale = std::abs(q.A) + std::abs(q.B) + std::abs(q.C) + std::abs(q.D) + std::abs(q.E);
    CHECK(std::abs(q.A + q.B + q.C + q.D + q.E) < 1e-12 * scale);
  }
}

TEST_CASE("quartic coefficients scale homogeneously") {
  oracle::Gen g(8);
  for (int i = 0; i < 500; ++i) {
    const double eps = g.uniform(0, 0.49), R = g.uniform(-1.5, 1.5);
    const double v1 = g.uniform(-2, 2), v2 = g.uniform(-2, 2), lam = g.log_uniform(0.1, 10);
    auto a = quartic_coefficients(eps, R, v1, v2);
    auto b = quartic_coefficients(eps, R, lam * v1, lam * v2);
    // F scales by lam, so the k-th coefficient scales by lam^(4 - k)
    CHECK(b.A == doctest::Approx(a.A).epsilon(1e-12));
    CHECK(b.B == doctest::Approx(lam * a.B).epsilon(1e-12));
    CHECK(b.C == doctest::Approx(lam * lam * a.C).epsilon(1e-12));
    CHECK(b.D == doctest::Approx(lam * lam * lam * a.D).epsilon(1e-12));
    CHECK(b.E == doctest::Approx(lam * lam * lam * lam * a.E).epsilon(1e-12));
  }
}

TEST_CASE("coefficient signs") {
  oracle::Gen g(12);
  for (int i = 0; i < 1000; ++i) {
    const double eps = g.uniform(1e-3, 0.49), R = g.uniform(-1.5, 1.5);
    const double v1 = g.uniform(-2, 2), v2 = g.uniform(-2, 2);
    auto q = quartic_coefficients(eps, R, v1, v2);
    CHECK(q.A > 0);
    CHECK(q.E <= 0);
  }
}

TEST_CASE("sampled indicatrix is a convex curve around the origin") {
  for (double eps : {0.0, 0.25, 0.49}) {
    for (double R : {0.0, 0.7, -1.4}) {
      auto curve = sample_curve(eps, R, 200);
      CHECK(curve.size() == 402);
      auto rep = curve_convexity(curve);
      CAPTURE(eps); CAPTURE(R);
      CHECK(rep.simple_convex);
      CHECK(rep.encloses_origin);
      CHECK(std::abs(rep.total_turning) == doctest::Approx(2 * pi).epsilon(1e-9));
    }
  }
}

TEST_CASE("base point validation") {
  TangentSample ok{0.3, 1.0, 0.5, 0.5};
  CHECK_NOTHROW(ok.validate());
  TangentSample edge{pi / 2, 0, 1, 0};
  CHECK_THROWS_AS(edge.validate(), zf::DomainError);
  TangentSample zero{0.3, 0, 0, 0};
  CHECK_THROWS_AS(zero.validate(), zf::DomainError);
}

}  // TEST_SUITE
