#pragma once

// Closed-radical solvers for depressed cubics and real quartics.
//
// The quartic pipeline is the classical one: shift away the cubic term,
// solve the resolvent cubic z^3 - 2 a z^2 + (a^2 - 4 c) z + b^2 = 0 with
// Cardano's formulas, then assemble the four roots from the square roots
// of -z1, -z2, -z3.  Everything here is a pure function of its arguments.

#include <array>
#include <complex>

namespace zf::poly {

using Complex = std::complex<double>;

/// Coefficients of a4 x^4 + a3 x^3 + a2 x^2 + a1 x + a0.
struct Quartic {
  double a4 = 0, a3 = 0, a2 = 0, a1 = 0, a0 = 0;

  double operator()(double x) const { return (((a4 * x + a3) * x + a2) * x + a1) * x + a0; }
  Complex operator()(Complex x) const { return (((a4 * x + a3) * x + a2) * x + a1) * x + a0; }
  double derivative(double x) const { return ((4 * a4 * x + 3 * a3) * x + 2 * a2) * x + a1; }

  /// Largest monomial magnitude max_k |a_k x^k|; the reference for backward errors.
  double monomial_scale(double x) const;
  double monomial_scale(Complex x) const;

  /// |p(x)| / max(monomial_scale(x), tiny).
  double backward_error(double x) const;
  double backward_error(Complex x) const;
};

/// X^4 + alpha X^2 + beta X + gamma, obtained from a Quartic by X = x + shift.
struct DepressedQuartic {
  double alpha = 0;
  double beta = 0;
  double gamma = 0;
  double shift = 0;  // a3 / (4 a4)
};

/// Depress a quartic; throws DomainError when a4 == 0 or inputs are not finite.
DepressedQuartic depress(const Quartic& q);

/// Rebuild the quartic a4 * depressed(x + shift); inverse of depress().
Quartic reconstruct(const DepressedQuartic& d, double a4);

/// Roots of w^3 + p w + q = 0.  w[0] = P + Q is always real.  In the one-real-root
/// regime P is the real cube root, otherwise the principal complex cube root;
/// Q is paired as -p / (3 P) so that P Q = -p / 3.
std::array<Complex, 3> solve_depressed_cubic(double p, double q);

/// Cardano data for the resolvent of X^4 + alpha X^2 + beta X + gamma.
struct ResolventSolution {
  Complex z1, z2, z3;  // z1 is real
  Complex P, Q;        // the Cardano radicals, P Q = -p/3
  double calA = 0;     // -q/2 of the depressed resolvent
  double calB = 0;     // q^2/4 + p^3/27, the quantity under the square root
  bool three_real = false;

  /// max(|alpha|, sqrt|gamma|, |beta|^(2/3)): the natural size of the z's.
  double scale = 0;
};

ResolventSolution solve_resolvent(double alpha, double beta, double gamma);

enum class Refinement {
  none,    // the radical assembly as is
  newton,  // plus Newton steps per root, kept while the backward error drops
};

/// The four roots of A x^4 + B x^3 + C x^2 + D x + E = 0 assembled from the
/// resolvent.  When the roots split into two real quadratic factors, the
/// factor with the smaller constant term is rebuilt from D and E, and the
/// order is: the pair containing (1/2)[s r1 + r2 + r3] - shift (the largest
/// real root whenever the quartic has one), then the other pair.  Conjugate
/// pairs are adjacent.  Radical assembly alone loses relative accuracy in the
/// small roots when one root dwarfs the others; Refinement::newton repairs that.
std::array<Complex, 4> solve_quartic(double A, double B, double C, double D, double E,
                                     Refinement refine = Refinement::newton);

/// Square-root branches r_i = sqrt(-z_i) with the Ferrari sign constraint
/// r1 r2 r3 = -beta applied to r1.
std::array<Complex, 3> resolvent_square_roots(const ResolventSolution& res, double beta);

/// sqrt(z) + sqrt(conj z) on the real branch, z = a + b i:
/// sqrt(2) * sqrt(a + sqrt(a^2 + b^2)).  Evaluated without cancellation for a < 0.
double combine_conjugate_sqrts(double a, double b);

/// Newton refinement of a real root from x0.  Throws ConvergenceError (carrying
/// the last iterate and its residual) when 50 iterations do not reach a
/// residual of 1e-13 times the monomial scale.
double polish_root(double A, double B, double C, double D, double E, double x0);
double polish_root(const Quartic& q, double x0);

}  // namespace zf::poly
