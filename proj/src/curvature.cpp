#include "zf/curvature.hpp"

#include <cmath>

#include "zf/errors.hpp"

namespace zf::finsler {

namespace {

using Vec4 = std::array<double, 4>;  // (x1, x2, y1, y2)

Vec2 operator+(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }
Vec2 operator-(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }
Vec2 operator*(double s, const Vec2& a) { return {s * a[0], s * a[1]}; }

Vec4 shifted(Vec4 z, int i, double di, int j = -1, double dj = 0) {
  z[i] += di;
  if (j >= 0) z[j] += dj;
  return z;
}

Vec4 lengths(const Vec4& z, const StencilScales& scales) {
  const double ny = std::hypot(z[2], z[3]);
  const Vec4 fallback{1, 1, ny, ny};
  Vec4 out{};
  for (int i = 0; i < 4; ++i) out[i] = scales[i] > 0 ? scales[i] : fallback[i];
  return out;
}

Vec4 times(const Vec4& v, double s) { return {v[0] * s, v[1] * s, v[2] * s, v[3] * s}; }

template <class T, class Fn>
T d1(Fn&& f, const Vec4& z, int i, double h) {
  return (1 / (2 * h)) * (f(shifted(z, i, h)) - f(shifted(z, i, -h)));
}

template <class T, class Fn>
T d2(Fn&& f, const Vec4& z, const T& center, int i, int j, double hi, double hj) {
  if (i == j) return (1 / (hi * hi)) * (f(shifted(z, i, hi)) - 2.0 * center + f(shifted(z, i, -hi)));
  return (1 / (4 * hi * hj)) * (f(shifted(z, i, hi, j, hj)) - f(shifted(z, i, hi, j, -hj)) -
                                f(shifted(z, i, -hi, j, hj)) + f(shifted(z, i, -hi, j, -hj)));
}

template <class T>
T richardson(const T& coarse, const T& fine) {
  return (1.0 / 3.0) * (4.0 * fine - coarse);
}

template <>
double richardson(const double& coarse, const double& fine) {
  return (4 * fine - coarse) / 3;
}

// All derivatives of the spray that enter R^i_k.
struct SprayJet {
  Vec2 G;
  std::array<Vec2, 4> dG;      // d/dz_m
  std::array<Vec2, 4> dxdy;    // [2 * a + b] = d^2 / dx^a dy^b
  std::array<Vec2, 4> dydy;    // [2 * a + b] = d^2 / dy^a dy^b
};

template <class Fn>
SprayJet spray_jet(Fn&& G, const Vec4& z, const Vec2& center, const Vec4& h) {
  SprayJet jet;
  jet.G = center;
  for (int m = 0; m < 4; ++m) jet.dG[m] = d1<Vec2>(G, z, m, h[m]);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) jet.dxdy[2 * a + b] = d2<Vec2>(G, z, center, a, 2 + b, h[a], h[2 + b]);
  for (int a = 0; a < 2; ++a)
    for (int b = a; b < 2; ++b) {
      jet.dydy[2 * a + b] = d2<Vec2>(G, z, center, 2 + a, 2 + b, h[2 + a], h[2 + b]);
      jet.dydy[2 * b + a] = jet.dydy[2 * a + b];
    }
  return jet;
}

double ricci_trace(const SprayJet& j, const Vec2& y) {
  double trace = 0;
  for (int i = 0; i < 2; ++i) {
    const int k = i;
    double R = 2 * j.dG[k][i];
    for (int a = 0; a < 2; ++a) R -= y[a] * j.dxdy[2 * a + k][i];
    for (int a = 0; a < 2; ++a) {
      R += 2 * j.G[a] * j.dydy[2 * a + k][i];
      R -= j.dG[2 + a][i] * j.dG[2 + k][a];
    }
    trace += R;
  }
  return trace;
}

}  // namespace

double CurvatureResult::error_estimate() const { return std::abs(K - K_second_order); }

namespace {

// Spray with absolute per-coordinate steps h.
Vec2 spray_with_steps(const FinslerFunction& F, const Vec4& z, const Vec4& h) {
  auto L = [&](const Vec4& w) {
    const double f = F({w[0], w[1]}, {w[2], w[3]});
    return f * f;
  };
  const double L0 = L(z);
  const Vec4 h2 = times(h, 0.5);
  const Vec2 y{z[2], z[3]};

  auto second = [&](int i, int j) {
    return richardson(d2<double>(L, z, L0, i, j, h[i], h[j]), d2<double>(L, z, L0, i, j, h2[i], h2[j]));
  };
  auto first = [&](int i) { return richardson(d1<double>(L, z, i, h[i]), d1<double>(L, z, i, h2[i])); };

  const double g11 = second(2, 2) / 2;
  const double g12 = second(2, 3) / 2;
  const double g22 = second(3, 3) / 2;
  const double det = g11 * g22 - g12 * g12;
  if (!(det > 0)) throw ConvexityViolation("spray: fiber Hessian is not positive definite");

  Vec2 rhs{};
  for (int l = 0; l < 2; ++l) {
    double acc = -first(l);
    for (int k = 0; k < 2; ++k) acc += second(k, 2 + l) * y[k];
    rhs[l] = acc;
  }
  return {(g22 * rhs[0] - g12 * rhs[1]) / (4 * det), (-g12 * rhs[0] + g11 * rhs[1]) / (4 * det)};
}

}  // namespace

Vec2 spray(const FinslerFunction& F, const Vec2& x, const Vec2& y, double step) {
  const Vec4 z{x[0], x[1], y[0], y[1]};
  return spray_with_steps(F, z, times(lengths(z, {}), step));
}

CurvatureResult flag_curvature_2d(const FinslerFunction& F, const Vec2& x, const Vec2& y,
                                  const DifferenceSteps& steps, const StencilScales& scales) {
  if (!(steps.inner > 0 && steps.outer > 0)) throw DomainError("flag_curvature_2d: steps must be positive");
  if (y[0] == 0 && y[1] == 0) throw DomainError("flag_curvature_2d: zero fiber vector");

  const Vec4 z{x[0], x[1], y[0], y[1]};
  // Steps are fixed at the base point so that every stencil node uses the same ones.
  const Vec4 len = lengths(z, scales);
  const Vec4 inner = times(len, steps.inner);
  auto G = [&](const Vec4& w) { return spray_with_steps(F, w, inner); };
  const Vec2 G0 = G(z);
  const Vec4 h = times(len, steps.outer);
  const Vec4 h2 = times(h, 0.5);

  const SprayJet coarse = spray_jet(G, z, G0, h);
  const SprayJet fine = spray_jet(G, z, G0, h2);
  SprayJet extrapolated = fine;
  for (int m = 0; m < 4; ++m) {
    extrapolated.dG[m] = richardson(coarse.dG[m], fine.dG[m]);
    extrapolated.dxdy[m] = richardson(coarse.dxdy[m], fine.dxdy[m]);
    extrapolated.dydy[m] = richardson(coarse.dydy[m], fine.dydy[m]);
  }

  const double f = F(x, y);
  const double F2 = f * f;
  CurvatureResult out;
  out.K = ricci_trace(extrapolated, y) / F2;
  out.K_second_order = ricci_trace(fine, y) / F2;
  return out;
}

}  // namespace zf::finsler
