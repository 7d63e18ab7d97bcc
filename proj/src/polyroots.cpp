#include "zf/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "zf/errors.hpp"

namespace zf::poly {

namespace {

constexpr double kTiny = 1e-300;
constexpr double kDegenerateCardano = 1e-12;
const double kHalfSqrt3 = std::sqrt(3.0) / 2;

bool all_finite(std::initializer_list<double> xs) {
  return std::all_of(xs.begin(), xs.end(), [](double x) { return std::isfinite(x); });
}

struct Cardano {
  std::array<Complex, 3> w;
  Complex P, Q;
  double calA = 0, calB = 0;
  bool three_real = false;
};

// w^3 + p w + q = 0.
Cardano cardano(double p, double q) {
  Cardano out;
  out.calA = -q / 2;
  out.calB = q * q / 4 + p * p * p / 27;
  double calB = out.calB;
  if (std::abs(calB) <= kDegenerateCardano * out.calA * out.calA) calB = 0;

  if (calB >= 0) {
    const double s = std::sqrt(calB);
    // Add the root with the sign of calA so that no cancellation occurs; P and Q
    // merely trade places compared to the textbook choice.
    const double t = out.calA + std::copysign(s, out.calA);
    const double P = std::cbrt(t);
    const double Q = P != 0 ? -p / (3 * P) : std::cbrt(out.calA - s);
    out.P = P;
    out.Q = Q;
    const double sum = P + Q;
    const double diff = kHalfSqrt3 * (P - Q);
    out.w = {Complex(sum, 0), Complex(-sum / 2, diff), Complex(-sum / 2, -diff)};
    out.three_real = (diff == 0);
  } else {
    // Casus irreducibilis: p < 0 and |P| = sqrt(-p/3).  Work in polar form so that
    // the three roots come out exactly real.
    const double modulus = std::sqrt(-p / 3);
    const double phi = std::atan2(std::sqrt(-calB), out.calA);
    out.P = std::polar(modulus, phi / 3);
    out.Q = std::conj(out.P);
    const double two_pi = 2 * std::numbers::pi;
    out.w = {Complex(2 * modulus * std::cos(phi / 3), 0),
             Complex(2 * modulus * std::cos((phi + two_pi) / 3), 0),
             Complex(2 * modulus * std::cos((phi - two_pi) / 3), 0)};
    out.three_real = true;
  }
  return out;
}

}  // namespace

double Quartic::monomial_scale(double x) const {
  const double ax = std::abs(x);
  const double x2 = ax * ax;
  return std::max({std::abs(a4) * x2 * x2, std::abs(a3) * x2 * ax, std::abs(a2) * x2,
                   std::abs(a1) * ax, std::abs(a0)});
}

double Quartic::monomial_scale(Complex x) const { return monomial_scale(std::abs(x)); }

double Quartic::backward_error(double x) const {
  return std::abs((*this)(x)) / std::max(monomial_scale(x), kTiny);
}

double Quartic::backward_error(Complex x) const {
  return std::abs((*this)(x)) / std::max(monomial_scale(x), kTiny);
}

DepressedQuartic depress(const Quartic& q) {
  if (!all_finite({q.a4, q.a3, q.a2, q.a1, q.a0})) throw DomainError("depress: non-finite coefficient");
  if (q.a4 == 0) throw DomainError("depress: leading coefficient is zero (degree < 4)");
  const double a = q.a3 / q.a4;
  const double b = q.a2 / q.a4;
  const double c = q.a1 / q.a4;
  const double d = q.a0 / q.a4;
  const double a2 = a * a;
  DepressedQuartic out;
  out.alpha = b - 3 * a2 / 8;
  out.beta = c - a * b / 2 + a2 * a / 8;
  out.gamma = d - a * c / 4 + a2 * b / 16 - 3 * a2 * a2 / 256;
  out.shift = a / 4;
  return out;
}

Quartic reconstruct(const DepressedQuartic& d, double a4) {
  // (x + s)^4 + alpha (x + s)^2 + beta (x + s) + gamma, expanded.
  const double s = d.shift;
  Quartic out;
  out.a4 = a4;
  out.a3 = a4 * 4 * s;
  out.a2 = a4 * (6 * s * s + d.alpha);
  out.a1 = a4 * (4 * s * s * s + 2 * d.alpha * s + d.beta);
  out.a0 = a4 * (s * s * s * s + d.alpha * s * s + d.beta * s + d.gamma);
  return out;
}

std::array<Complex, 3> solve_depressed_cubic(double p, double q) {
  if (!all_finite({p, q})) throw DomainError("solve_depressed_cubic: non-finite coefficient");
  return cardano(p, q).w;
}

ResolventSolution solve_resolvent(double alpha, double beta, double gamma) {
  if (!all_finite({alpha, beta, gamma})) throw DomainError("solve_resolvent: non-finite coefficient");

  // z = w + 2 alpha / 3 turns z^3 - 2 alpha z^2 + (alpha^2 - 4 gamma) z + beta^2
  // into w^3 + p w + q.
  const double p = -alpha * alpha / 3 - 4 * gamma;
  const double q = 2 * alpha * alpha * alpha / 27 - 8 * alpha * gamma / 3 + beta * beta;
  const Cardano c = cardano(p, q);

  ResolventSolution out;
  out.P = c.P;
  out.Q = c.Q;
  out.calA = c.calA;
  out.calB = c.calB;
  out.three_real = c.three_real;
  out.scale = std::max({std::abs(alpha), std::sqrt(std::abs(gamma)), std::cbrt(beta * beta)});

  const Complex shift(2 * alpha / 3, 0);
  std::array<Complex, 3> z = {c.w[0] + shift, c.w[1] + shift, c.w[2] + shift};

  if (beta == 0) {
    // z (z^2 - 2 alpha z + alpha^2 - 4 gamma): z1 = 0 exactly, z2,3 = alpha +- 2 sqrt(gamma).
    const Complex root = 2.0 * std::sqrt(Complex(gamma, 0));
    z = {Complex(0, 0), alpha + root, alpha - root};
    if (root.imag() == 0 && z[2].real() > z[1].real()) std::swap(z[1], z[2]);
    out.three_real = gamma >= 0;
  } else {
    // The root of smallest modulus loses all relative accuracy to cancellation in
    // P + Q + 2 alpha / 3.  Vieta's z1 z2 z3 = -beta^2 recovers it from the other two.
    std::size_t k = 0;
    for (std::size_t i = 1; i < 3; ++i)
      if (std::abs(z[i]) < std::abs(z[k])) k = i;
    const Complex others = z[(k + 1) % 3] * z[(k + 2) % 3];
    const double largest = std::max({std::abs(z[0]), std::abs(z[1]), std::abs(z[2])});
    if (std::abs(z[k]) < 0.1 * largest && std::abs(others) > 0) {
      const Complex refined = -beta * beta / others;
      // Only the real root may be replaced by a real value, and a member of a
      // conjugate pair keeps its partner in sync.
      if (k == 0) {
        z[0] = Complex(refined.real(), 0);
      } else if (c.three_real) {
        z[k] = Complex(refined.real(), 0);
      } else {
        z[k] = refined;
        z[k == 1 ? 2 : 1] = std::conj(refined);
      }
    }
  }
  out.z1 = z[0];
  out.z2 = z[1];
  out.z3 = z[2];
  return out;
}

std::array<Complex, 3> resolvent_square_roots(const ResolventSolution& res, double beta) {
  Complex r1 = std::sqrt(-res.z1);
  Complex r2 = std::sqrt(-res.z2);
  Complex r3 = res.z2 == std::conj(res.z3) && res.z2.imag() != 0 ? std::conj(r2) : std::sqrt(-res.z3);
  // Flip r1 when -r1 r2 r3 is the closer match to -beta.
  const Complex product = r1 * r2 * r3;
  if (std::abs(product - beta) < std::abs(product + beta)) r1 = -r1;
  return {r1, r2, r3};
}

namespace {

// Monic quadratic factor x^2 + a x + b.
struct QuadFactor {
  double a = 0;
  double b = 0;
};

// Roots of x^2 + a x + b without cancellation: the root of larger modulus from
// the formula, its partner from the product b; real roots in decreasing order.
std::array<Complex, 2> quadratic_roots(const QuadFactor& f) {
  const double half = -f.a / 2;
  const double disc = half * half - f.b;
  if (disc < 0) {
    const double im = std::sqrt(-disc);
    return {Complex(half, im), Complex(half, -im)};
  }
  const double big = half + std::copysign(std::sqrt(disc), half);
  if (big == 0) return {Complex(0, 0), Complex(0, 0)};
  const double small = f.b / big;
  return {Complex(std::max(big, small), 0), Complex(std::min(big, small), 0)};
}

// Factor pair from the depressed roots X = pair_sum / 2 +- pair_diff / 2, moved
// back to x = X - shift and written as x^2 + a x + b.
QuadFactor factor_from(Complex first, Complex second, double shift) {
  const Complex x1 = first - shift;
  const Complex x2 = second - shift;
  return {-(x1 + x2).real(), (x1 * x2).real()};
}

std::array<Complex, 4> radical_roots(double A, double B, double C, double D, double E);

// A few Newton steps that are kept only while they lower the backward error.
template <class T>
T refine_root(const Quartic& q, T x) {
  double best = q.backward_error(x);
  for (int it = 0; it < 8 && best > 0; ++it) {
    const T dp = ((4 * q.a4 * x + 3 * q.a3) * x + 2 * q.a2) * x + q.a1;
    if (dp == T(0)) break;
    const T next = x - q(x) / dp;
    const double err = q.backward_error(next);
    if (!(err < best)) break;
    x = next;
    best = err;
  }
  return x;
}

}  // namespace

std::array<Complex, 4> solve_quartic(double A, double B, double C, double D, double E, Refinement refine) {
  std::array<Complex, 4> roots = radical_roots(A, B, C, D, E);
  if (refine == Refinement::none) return roots;
  const Quartic q{A, B, C, D, E};
  for (std::size_t i = 0; i < 4; ++i) {
    if (roots[i].imag() == 0) {
      roots[i] = Complex(refine_root(q, roots[i].real()), 0);
    } else if (i + 1 < 4 && roots[i + 1] == std::conj(roots[i])) {
      roots[i] = refine_root(q, roots[i]);
      roots[i + 1] = std::conj(roots[i]);
      ++i;
    } else {
      roots[i] = refine_root(q, roots[i]);
    }
  }
  return roots;
}

namespace {

std::array<Complex, 4> radical_roots(double A, double B, double C, double D, double E) {
  if (!all_finite({A, B, C, D, E})) throw DomainError("solve_quartic: non-finite coefficient");
  if (A == 0) throw DomainError("solve_quartic: A == 0, the polynomial is not of degree 4");

  const DepressedQuartic d = depress(Quartic{A, B, C, D, E});
  const ResolventSolution res = solve_resolvent(d.alpha, d.beta, d.gamma);
  const auto [r1, r2, r3] = resolvent_square_roots(res, d.beta);

  std::array<Complex, 4> X = {0.5 * (r1 + r2 + r3), 0.5 * (r1 - r2 - r3), 0.5 * (-r1 + r2 - r3),
                              0.5 * (-r1 - r2 + r3)};
  const bool split = res.z1.imag() == 0 && res.z1.real() <= 0 && r3 == std::conj(r2);
  if (!split) {
    for (auto& x : X) x -= d.shift;
    return X;
  }

  // r1 is real and r2 + r3 is real, so the roots split into two real quadratic
  // factors.  The factor with the smaller constant term comes out of the
  // assembly with large relative error (its roots are differences of much
  // larger quantities); rebuild it from the two lowest coefficients of the
  // monic quartic instead:  a0 = b d,  a1 = a d + b c.
  QuadFactor f = factor_from(X[0], X[1], d.shift);
  QuadFactor g = factor_from(X[2], X[3], d.shift);
  const double a1 = D / A;
  const double a0 = E / A;
  if (std::abs(g.b) <= std::abs(f.b) && f.b != 0) {
    g.b = a0 / f.b;
    g.a = (a1 - g.b * f.a) / f.b;
  } else if (g.b != 0) {
    f.b = a0 / g.b;
    f.a = (a1 - f.b * g.a) / g.b;
  }
  const auto p = quadratic_roots(f);
  const auto q = quadratic_roots(g);
  return {p[0], p[1], q[0], q[1]};
}

}  // namespace

double combine_conjugate_sqrts(double a, double b) {
  const double modulus = std::hypot(a, b);
  if (a >= 0) return std::sqrt(2.0) * std::sqrt(a + modulus);
  // a + |z| = b^2 / (|z| - a) avoids subtracting nearly equal numbers.
  if (modulus == 0) return 0;
  return std::sqrt(2.0) * std::abs(b) / std::sqrt(modulus - a);
}

double polish_root(const Quartic& q, double x0) {
  constexpr int kMaxIterations = 50;
  constexpr double kResidualTolerance = 1e-13;
  if (!std::isfinite(x0)) throw DomainError("polish_root: non-finite starting point");
  if (q.a4 == 0) throw DomainError("polish_root: A == 0");

  double x = x0;
  for (int it = 0; it < kMaxIterations; ++it) {
    const double f = q(x);
    if (f == 0) return x;
    const double fp = q.derivative(x);
    if (fp == 0) break;
    const double dx = f / fp;
    x -= dx;
    if (std::abs(dx) <= 4 * std::numeric_limits<double>::epsilon() * std::abs(x) || dx == 0) {
      // One more step to settle the last bit, then stop.
      const double fp2 = q.derivative(x);
      if (fp2 != 0) {
        const double x2 = x - q(x) / fp2;
        if (q.backward_error(x2) <= q.backward_error(x)) x = x2;
      }
      break;
    }
  }
  const double residual = q.backward_error(x);
  if (!(residual <= kResidualTolerance)) {
    std::ostringstream msg;
    msg << "polish_root: no convergence from x0 = " << x0 << ", last iterate " << x
        << ", relative residual " << residual;
    throw ConvergenceError(msg.str(), x, residual);
  }
  return x;
}

double polish_root(double A, double B, double C, double D, double E, double x0) {
  return polish_root(Quartic{A, B, C, D, E}, x0);
}

}  // namespace zf::poly
