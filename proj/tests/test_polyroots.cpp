#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "zf/errors.hpp"
#include "zf/polyroots.hpp"

using namespace zf::poly;

namespace {

std::vector<double> sorted_real(const std::array<Complex, 3>& w) {
  std::vector<double> v;
  for (auto z : w) v.push_back(z.real());
  std::sort(v.begin(), v.end());
  return v;
}

// Smallest |x - r| over roots, for matching roots without relying on order.
double nearest(const std::array<Complex, 4>& roots, Complex x) {
  double best = INFINITY;
  for (auto r : roots) best = std::min(best, std::abs(r - x));
  return best;
}

}  // namespace

TEST_SUITE("polyroots") {

TEST_CASE("cubic with three integer roots") {
  auto w = solve_depressed_cubic(-7, 6);
  for (auto z : w) CHECK(std::abs(z.imag()) < 1e-12);
  auto v = sorted_real(w);
  CHECK(v[0] == doctest::Approx(-3).epsilon(1e-12));
  CHECK(v[1] == doctest::Approx(1).epsilon(1e-12));
  CHECK(v[2] == doctest::Approx(2).epsilon(1e-12));
}

TEST_CASE("cubic with one real root uses the real cube root") {
  // w^3 + w - 2 = (w - 1)(w^2 + w + 2)
  auto w = solve_depressed_cubic(1, -2);
  CHECK(w[0].imag() == 0.0);
  CHECK(w[0].real() == doctest::Approx(1).epsilon(1e-14));
  CHECK(std::abs(w[1] - std::conj(w[2])) < 1e-12);
  CHECK(std::abs(w[1].imag()) == doctest::Approx(std::sqrt(7.0) / 2).epsilon(1e-12));
}

TEST_CASE("resolvent of x^4 - x^2") {
  auto res = solve_resolvent(-1, 0, 0);
  std::vector<double> z{res.z1.real(), res.z2.real(), res.z3.real()};
  std::sort(z.begin(), z.end());
  CHECK(z[0] == doctest::Approx(-1).epsilon(1e-12));
  CHECK(z[1] == doctest::Approx(-1).epsilon(1e-12));
  CHECK(std::abs(z[2]) < 1e-12);
}

TEST_CASE("biquadratic resolvent has an exact zero root") {
  auto res = solve_resolvent(-0.99, 0, -0.08);
  CHECK(res.z1 == Complex(0, 0));
  CHECK(std::abs(res.z2 - std::conj(res.z3)) == 0.0);
  auto real = solve_resolvent(-3, 0, 2);  // z = 0, -3 +- 2 sqrt 2
  CHECK(real.z1 == Complex(0, 0));
  CHECK(real.three_real);
  CHECK(real.z2.real() == doctest::Approx(-3 + 2 * std::sqrt(2.0)));
  CHECK(real.z3.real() == doctest::Approx(-3 - 2 * std::sqrt(2.0)));
}

TEST_CASE("resolvent roots satisfy Vieta") {
  oracle::Gen g(11);
  for (int i = 0; i < 500; ++i) {
    const double a = g.uniform(-5, 5), b = g.uniform(-5, 5), c = g.uniform(-5, 5);
    auto res = solve_resolvent(a, b, c);
    const double s3 = res.scale * res.scale * res.scale;
    CAPTURE(a); CAPTURE(b); CAPTURE(c);
    CHECK(std::abs(res.z1 + res.z2 + res.z3 - 2.0 * a) < 1e-10 * std::max(1.0, res.scale));
    CHECK(std::abs(res.z1 * res.z2 * res.z3 + b * b) < 1e-9 * std::max(1.0, s3));
  }
}

TEST_CASE("depress and reconstruct") {
  auto d = depress({1, 4, 0, 0, 0});
  CHECK(d.shift == doctest::Approx(1));
  CHECK(d.alpha == doctest::Approx(-6));
  CHECK(d.beta == doctest::Approx(8));
  CHECK(d.gamma == doctest::Approx(-3));
  auto q = reconstruct(d, 1);
  CHECK(q.a3 == doctest::Approx(4));
  CHECK(std::abs(q.a2) < 1e-12);
  CHECK(std::abs(q.a1) < 1e-12);
  CHECK(std::abs(q.a0) < 1e-12);
  CHECK_THROWS_AS(depress({0, 1, 1, 1, 1}), zf::DomainError);
  CHECK_THROWS_AS(depress({1, NAN, 1, 1, 1}), zf::DomainError);
}

TEST_CASE("depress round-trips random quartics") {
  oracle::Gen g(5);
  for (int i = 0; i < 1000; ++i) {
    Quartic q{g.uniform(0.1, 3), g.uniform(-3, 3), g.uniform(-3, 3), g.uniform(-3, 3), g.uniform(-3, 3)};
    auto r = reconstruct(depress(q), q.a4);
    const double scale = 1 + std::abs(q.a3 / q.a4) * 40;
    CHECK(std::abs(r.a3 - q.a3) < 1e-12 * scale);
    CHECK(std::abs(r.a2 - q.a2) < 1e-11 * scale * scale);
    CHECK(std::abs(r.a1 - q.a1) < 1e-11 * scale * scale * scale);
    CHECK(std::abs(r.a0 - q.a0) < 1e-11 * scale * scale * scale * scale);
  }
}

TEST_CASE("quartic with roots 1, 2, 3, 4") {
  auto roots = solve_quartic(1, -10, 35, -50, 24, Refinement::none);
  for (double x : {1.0, 2.0, 3.0, 4.0}) CHECK(nearest(roots, x) < 1e-12);
}

TEST_CASE("x^4 + 1 has the four primitive eighth roots of unity") {
  auto roots = solve_quartic(1, 0, 0, 0, 1);
  const double h = std::sqrt(0.5);
  for (Complex z : {Complex(h, h), Complex(h, -h), Complex(-h, h), Complex(-h, -h)})
    CHECK(nearest(roots, z) < 1e-12);
}

TEST_CASE("largest real root comes first when the quartic has real roots") {
  auto roots = solve_quartic(1, -10, 35, -50, 24);
  CHECK(roots[0].real() == doctest::Approx(4).epsilon(1e-12));
}

TEST_CASE("constructed roots are recovered by the radicals") {
  oracle::Gen g(2024);
  for (int i = 0; i < 2000; ++i) {
    std::array<double, 4> r{g.uniform(-3, 3), g.uniform(-3, 3), g.uniform(-3, 3), g.uniform(-3, 3)};
    // keep the roots apart so the comparison is well conditioned
    bool apart = true;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) apart &= std::abs(r[a] - r[b]) > 0.1;
    if (!apart) continue;
    auto c = oracle::from_roots(1, r);
    auto roots = solve_quartic(c[0], c[1], c[2], c[3], c[4], Refinement::none);
    for (double x : r) CHECK(nearest(roots, x) < 1e-8);
  }
}

TEST_CASE("backward error stays small for random coefficients") {
  oracle::Gen g(7);
  for (int i = 0; i < 2000; ++i) {
    Quartic q{g.log_uniform(1e-3, 10), g.uniform(-10, 10), g.uniform(-10, 10), g.uniform(-10, 10),
              g.uniform(-10, 10)};
    auto roots = solve_quartic(q.a4, q.a3, q.a2, q.a1, q.a0);
    for (auto z : roots) CHECK(q.backward_error(z) < 1e-12);
  }
}

TEST_CASE("combined conjugate square roots") {
  CHECK(combine_conjugate_sqrts(3, 4) == doctest::Approx(4));
  // z = -1: sqrt(-1) + sqrt(-1)* = 0
  CHECK(combine_conjugate_sqrts(-1, 0) == doctest::Approx(0));
  oracle::Gen g(3);
  for (int i = 0; i < 1000; ++i) {
    const double a = g.uniform(-10, 10), b = g.uniform(-10, 10);
    const Complex z(a, b);
    const double direct = (std::sqrt(z) + std::sqrt(std::conj(z))).real();
    CHECK(combine_conjugate_sqrts(a, b) == doctest::Approx(direct).epsilon(1e-10));
  }
}

TEST_CASE("polishing a root") {
  CHECK(polish_root(1, 0, -2, 0, 0, 1.4) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(polish_root(1, -10, 35, -50, 24, 3.9) == doctest::Approx(4).epsilon(1e-14));
}

TEST_CASE("polishing without a real root reports the last iterate") {
  try {
    polish_root(1, 0, 0, 0, 1, 0.5);
    FAIL("expected ConvergenceError");
  } catch (const zf::ConvergenceError& e) {
    CHECK(std::isfinite(e.last_iterate()));
    CHECK(e.residual() > 0);
  }
}

}  // TEST_SUITE
