#pragma once

// Flag curvature of a two-dimensional Finsler metric from finite differences.
//
// With L = F^2, the spray coefficients are
//   G^i = 1/4 g^{il} (L_{x^k y^l} y^k - L_{x^l}),   g_ij = 1/2 L_{y^i y^j},
// the Riemann curvature is
//   R^i_k = 2 G^i_{x^k} - y^j G^i_{x^j y^k} + 2 G^j G^i_{y^j y^k} - G^i_{y^j} G^j_{y^k},
// and in dimension two the flag curvature is K = R^i_i / F^2.
//
// Both levels use central differences; each derivative is taken at step h and
// h/2 and combined by Richardson extrapolation.  The step in each coordinate is
// the nominal step times a characteristic length of that coordinate, by
// default 1 in the base and |y| in the fiber.

#include <array>
#include <functional>

namespace zf::finsler {

using Vec2 = std::array<double, 2>;

/// F(x, y) for base point x and fiber vector y.
using FinslerFunction = std::function<double(const Vec2& x, const Vec2& y)>;

struct DifferenceSteps {
  double inner = 3e-3;  // derivatives of F^2 inside the spray
  double outer = 2e-2;  // derivatives of the spray
};

/// Characteristic lengths of (x1, x2, y1, y2).  Zero entries mean the default.
using StencilScales = std::array<double, 4>;

struct CurvatureResult {
  double K = 0;               // Richardson-extrapolated (fourth order)
  double K_second_order = 0;  // plain central differences at the finer step
  double error_estimate() const;
};

/// Spray coefficients (G^1, G^2) at (x, y).
Vec2 spray(const FinslerFunction& F, const Vec2& x, const Vec2& y, double step);

CurvatureResult flag_curvature_2d(const FinslerFunction& F, const Vec2& x, const Vec2& y,
                                  const DifferenceSteps& steps = {}, const StencilScales& scales = {});

}  // namespace zf::finsler
