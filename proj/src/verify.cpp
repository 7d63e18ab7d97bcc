#include "zf/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "zf/finsler.hpp"
#include "zf/geodesic.hpp"
#include "zf/indicatrix.hpp"
#include "zf/polyroots.hpp"
#include "zf/zoll.hpp"

namespace zf::verify {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGridMargin = 0.05;  // R grids stay inside (-pi/2 + 0.05, pi/2 - 0.05)

using Rng = std::mt19937_64;

struct FieldRef {
  const char* name;
  double Tolerances::*field;
};

constexpr FieldRef kFields[] = {
    {"gauss_agreement", &Tolerances::gauss_agreement},
    {"implicit_residual", &Tolerances::implicit_residual},
    {"turning_integral", &Tolerances::turning_integral},
    {"backward_error", &Tolerances::backward_error},
    {"polish_agreement", &Tolerances::polish_agreement},
    {"normalization", &Tolerances::normalization},
    {"resolvent_vieta", &Tolerances::resolvent_vieta},
    {"homogeneity", &Tolerances::homogeneity},
    {"flag_curvature", &Tolerances::flag_curvature},
    {"closure", &Tolerances::closure},
    {"return_length", &Tolerances::return_length},
    {"invariant_drift", &Tolerances::invariant_drift},
    {"round_limit", &Tolerances::round_limit},
    {"quartic_roots", &Tolerances::quartic_roots},
};

std::vector<double> epsilons(const SuiteConfig& cfg, std::vector<double> defaults) {
  if (cfg.epsilon) return {*cfg.epsilon};
  return defaults;
}

// Separate stream per criterion so that criteria are independent of run order.
Rng rng_for(const SuiteConfig& cfg, int criterion) {
  std::seed_seq seq{cfg.seed, static_cast<std::uint64_t>(criterion)};
  return Rng(seq);
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

// R grid of `n` points strictly inside (-pi/2 + margin, pi/2 - margin).
std::vector<double> R_grid(int n) {
  std::vector<double> out;
  const double lo = -kPi / 2 + kGridMargin;
  const double span = kPi - 2 * kGridMargin;
  for (int i = 0; i < n; ++i) out.push_back(lo + (i + 0.5) * span / n);
  return out;
}

// r grid of `n` midpoints of [|R|, pi - |R|].
std::vector<double> r_grid(double R, int n) {
  const double Ra = std::abs(R);
  std::vector<double> out;
  for (int k = 0; k < n; ++k) out.push_back(Ra + (k + 0.5) * (kPi - 2 * Ra) / n);
  return out;
}

struct FiberSample {
  double R, v1, v2;
};

// Base point uniform in the chart; direction uniform; length log-uniform in [0.1, 10].
FiberSample random_fiber(Rng& rng) {
  const double R = uniform(rng, -kPi / 2 + kGridMargin, kPi / 2 - kGridMargin);
  const double phi = uniform(rng, 0, 2 * kPi);
  const double rho = std::exp(uniform(rng, std::log(0.1), std::log(10.0)));
  return {R, rho * std::cos(phi), rho * std::sin(phi)};
}

template <class Fn>
void for_each_indicatrix_point(const std::vector<double>& eps_set, Fn&& fn) {
  for (double eps : eps_set)
    for (double R : R_grid(20))
      for (double r : r_grid(R, 50))
        for (auto b : {indicatrix::Branch::plus, indicatrix::Branch::minus})
          fn(eps, R, r, indicatrix::indicatrix_point(eps, R, r, b));
}

std::string format_number(double x) {
  std::ostringstream s;
  s << std::setprecision(3) << x;
  return s.str();
}

}  // namespace

void Tolerances::set(const std::string& name, double value) {
  if (!(value > 0) || !std::isfinite(value))
    throw std::invalid_argument("tolerance '" + name + "' must be positive and finite");
  for (const auto& f : kFields)
    if (name == f.name) {
      this->*f.field = value;
      return;
    }
  throw std::invalid_argument("unknown tolerance '" + name + "'");
}

std::vector<std::string> Tolerances::names() {
  std::vector<std::string> out;
  for (const auto& f : kFields) out.emplace_back(f.name);
  return out;
}

bool Measurement::passed() const {
  if (!std::isfinite(value)) return false;
  return relation == Relation::below ? value < threshold : value > threshold;
}

bool CriterionResult::passed() const {
  if (!detail.empty() || measurements.empty()) return false;
  return std::all_of(measurements.begin(), measurements.end(), [](const Measurement& m) { return m.passed(); });
}

std::string CriterionResult::summary_line() const {
  std::ostringstream s;
  s << (passed() ? "PASS" : "FAIL") << ' ' << std::setw(2) << id << ' ' << name;
  for (const auto& m : measurements)
    s << "  " << m.name << '=' << format_number(m.value) << " (" << (m.relation == Relation::below ? "< " : "> ")
      << format_number(m.threshold) << ')';
  if (!note.empty()) s << "  [" << note << ']';
  if (!detail.empty()) s << "  error: " << detail;
  return s.str();
}

CriterionResult gauss_curvature_positivity(const SuiteConfig& cfg) {
  CriterionResult out{1, "gauss-curvature-positivity", {}, {}, {}};
  double min_G = HUGE_VAL;
  double worst_rel = 0;
  int failed_conditions = 0;
  constexpr int kPoints = 10000;
  for (double eps : epsilons(cfg, {0.05, 0.25, 0.45})) {
    const zoll::HParam p(eps);
    for (int i = 0; i < kPoints; ++i) {
      const double x = -1 + 2.0 * i / (kPoints - 1);
      const double cubic = zoll::gauss_curvature_cubic(eps, x);
      const double general = zoll::gauss_curvature_general(p, x);
      min_G = std::min(min_G, cubic);
      worst_rel = std::max(worst_rel, std::abs(cubic - general) / std::abs(general));
    }
    if (!zoll::darboux_check(p, kPoints).all_passed()) ++failed_conditions;
  }
  out.measurements = {{"min_curvature", min_G, 0, Relation::above},
                      {"form_disagreement", worst_rel, cfg.tol.gauss_agreement, Relation::below},
                      {"failed_conditions", double(failed_conditions), 0.5, Relation::below}};
  return out;
}

CriterionResult parametric_implicit_identity(const SuiteConfig& cfg) {
  CriterionResult out{2, "parametric-implicit-identity", {}, {}, {}};
  const auto eps_set = epsilons(cfg, {0.05, 0.1, 0.25, 0.4, 0.45});
  double worst = 0;
  double worst_sum = 0;  // A + B + C + D + E at the indicatrix point (F = 1)
  for_each_indicatrix_point(eps_set, [&](double eps, double R, double, indicatrix::FiberPoint p) {
    worst = std::max(worst, std::abs(indicatrix::implicit_residual(eps, R, p.v1, p.v2)));
    const auto q = indicatrix::quartic_coefficients(eps, R, p.v1, p.v2);
    const double scale = std::max({std::abs(q.A), std::abs(q.B), std::abs(q.C), std::abs(q.D), std::abs(q.E)});
    worst_sum = std::max(worst_sum, std::abs(q.A + q.B + q.C + q.D + q.E) / scale);
  });
  int non_convex = 0;
  for (double eps : eps_set)
    for (double R : R_grid(20)) {
      const auto rep = indicatrix::curve_convexity(indicatrix::sample_curve(eps, R, 200));
      if (!rep.simple_convex || !rep.encloses_origin) ++non_convex;
    }
  out.measurements = {{"max_residual", worst, cfg.tol.implicit_residual, Relation::below},
                      {"coefficient_sum", worst_sum, cfg.tol.implicit_residual, Relation::below},
                      {"non_convex_curves", double(non_convex), 0.5, Relation::below}};
  return out;
}

CriterionResult integral_identity(const SuiteConfig& cfg) {
  CriterionResult out{3, "integral-identity", {}, {}, {}};
  double worst = 0;
  double worst_v2 = 0;
  for (double eps : epsilons(cfg, {0.05, 0.1, 0.25, 0.4, 0.45}))
    for (double R : R_grid(20))
      for (double r : r_grid(R, 50)) {
        const auto I = indicatrix::turning_integral(eps, R, r);
        worst = std::max(worst, I.discrepancy() / std::max(1.0, std::abs(I.closed_form)));
        const double closed = indicatrix::v2_closed_form(eps, R, r);
        const double integral = indicatrix::v2_integral_form(eps, R, r);
        worst_v2 = std::max(worst_v2, std::abs(closed - integral) / std::max(1.0, std::abs(closed)));
      }
  out.measurements = {{"closed_vs_quadrature", worst, cfg.tol.turning_integral, Relation::below},
                      {"v2_forms", worst_v2, cfg.tol.turning_integral, Relation::below}};
  return out;
}

CriterionResult radical_formula(const SuiteConfig& cfg) {
  CriterionResult out{4, "radical-formula", {}, {}, {}};
  Rng rng = rng_for(cfg, 4);
  double worst_residual = 0;
  double worst_gap = 0;
  int untrusted = 0;
  for (int i = 0; i < cfg.random_samples; ++i) {
    const double eps = cfg.epsilon ? *cfg.epsilon : uniform(rng, 0.01, 0.49);
    const auto s = random_fiber(rng);
    const auto e = finsler::FinslerMetric(eps).evaluate(s.R, s.v1, s.v2);
    worst_residual = std::max(worst_residual, e.residual);
    worst_gap = std::max(worst_gap, e.polish_gap / std::max(1.0, e.F));
    if (!e.trusted) ++untrusted;
  }
  double worst_norm = 0;
  for_each_indicatrix_point(epsilons(cfg, {0.05, 0.1, 0.25, 0.4, 0.45}),
                            [&](double eps, double R, double, indicatrix::FiberPoint p) {
                              const double F = finsler::FinslerMetric(eps).evaluate(R, p.v1, p.v2).F;
                              worst_norm = std::max(worst_norm, std::abs(F - 1));
                            });
  out.measurements = {{"backward_error", worst_residual, cfg.tol.backward_error, Relation::below},
                      {"polish_gap", worst_gap, cfg.tol.polish_agreement, Relation::below},
                      {"indicatrix_norm", worst_norm, cfg.tol.normalization, Relation::below},
                      {"untrusted", double(untrusted), 0.5, Relation::below}};
  return out;
}

CriterionResult sign_structure(const SuiteConfig& cfg) {
  CriterionResult out{5, "sign-structure", {}, {}, {}};
  Rng rng = rng_for(cfg, 5);
  int lemma_violations = 0;
  int eliminated_case = 0;  // all resolvent roots real with two positive
  int census_failures = 0;  // not exactly one positive real root
  int four_real = 0;
  double worst_vieta = 0;
  for (int i = 0; i < cfg.random_samples; ++i) {
    const double eps = cfg.epsilon ? *cfg.epsilon : uniform(rng, 1e-3, 0.499);
    const auto s = random_fiber(rng);
    const auto q = indicatrix::quartic_coefficients(eps, s.R, s.v1, s.v2);
    if (s.v1 != 0 && !(q.A > 0 && q.C < 0 && q.E < 0)) ++lemma_violations;

    const auto d = finsler::depress(q);
    const auto res = poly::solve_resolvent(d.alpha, d.beta, d.gamma);
    const auto product = res.z1 * res.z2 * res.z3;
    const double b2 = d.beta * d.beta;
    worst_vieta = std::max(worst_vieta, std::abs(product + b2) / (std::abs(res.z1) * std::abs(res.z2) *
                                                                       std::abs(res.z3) + b2));
    if (res.three_real) {
      const int positive = (res.z1.real() > 0) + (res.z2.real() > 0) + (res.z3.real() > 0);
      if (positive == 2) ++eliminated_case;
    }
    const auto census = finsler::root_classify(q);
    if (census.positive != 1) ++census_failures;
    if (census.pattern == finsler::RootPattern::four_real) ++four_real;
  }
  out.measurements = {{"lemma_violations", double(lemma_violations), 0.5, Relation::below},
                      {"resolvent_vieta", worst_vieta, cfg.tol.resolvent_vieta, Relation::below},
                      {"eliminated_case", double(eliminated_case), 0.5, Relation::below},
                      {"positive_root_census", double(census_failures), 0.5, Relation::below}};
  out.note = std::to_string(four_real) + " of " + std::to_string(cfg.random_samples) +
             " samples with four real roots";
  return out;
}

CriterionResult finsler_axioms(const SuiteConfig& cfg) {
  CriterionResult out{6, "finsler-axioms", {}, {}, {}};
  Rng rng = rng_for(cfg, 6);
  double worst_hom = 0;
  for (int i = 0; i < cfg.homogeneity_samples; ++i) {
    const double eps = cfg.epsilon ? *cfg.epsilon : uniform(rng, 0.01, 0.49);
    const auto s = random_fiber(rng);
    const finsler::FinslerMetric m(eps);
    for (double lambda : {1e-3, 0.5, 2.0, 1e3})
      worst_hom = std::max(worst_hom, m.homogeneity_defect(s.R, s.v1, s.v2, lambda));
  }
  double min_eig = HUGE_VAL;
  const auto eps_set = epsilons(cfg, {0.05, 0.1, 0.25, 0.4, 0.45});
  for (double eps : eps_set) {
    const finsler::FinslerMetric m(eps);
    for (double R : R_grid(20))
      for (int k = 0; k < 16; ++k) {
        const double phi = 2 * kPi * (k + 0.5) / 16;
        // The Hessian of F^2/2 is 0-homogeneous; compare eigenvalues at F = 1.
        const double F = m.norm(R, std::cos(phi), std::sin(phi));
        const auto H = m.hessian(R, std::cos(phi) / F, std::sin(phi) / F);
        min_eig = std::min(min_eig, H.eig_min);
      }
  }
  out.measurements = {{"homogeneity_defect", worst_hom, cfg.tol.homogeneity, Relation::below},
                      {"min_hessian_eigenvalue", min_eig, 0, Relation::above}};
  return out;
}

CriterionResult constant_flag_curvature(const SuiteConfig& cfg) {
  CriterionResult out{7, "constant-flag-curvature", {}, {}, {}};
  Rng rng = rng_for(cfg, 7);
  double worst = 0;
  int samples = 0;
  for (double eps : epsilons(cfg, {0.1, 0.25, 0.4})) {
    const finsler::FinslerMetric m(eps);
    for (int i = 0; i < cfg.curvature_samples; ++i) {
      const auto s = random_fiber(rng);
      const double theta = uniform(rng, 0, 2 * kPi);
      worst = std::max(worst, std::abs(m.flag_curvature(s.R, theta, s.v1, s.v2).K - 1));
      ++samples;
    }
  }
  out.measurements = {{"max_abs_K_minus_1", worst, cfg.tol.flag_curvature, Relation::below},
                      {"samples", double(samples), 199.5, Relation::above}};
  return out;
}

CriterionResult zoll_property(const SuiteConfig& cfg) {
  CriterionResult out{8, "zoll-property", {}, {}, {}};
  Rng rng = rng_for(cfg, 8);
  constexpr double kTwoPi = 2 * kPi;
  double worst_closure = 0;
  double worst_length = 0;
  double worst_drift = 0;
  for (double eps : epsilons(cfg, {0.1, 0.25, 0.4})) {
    const zoll::ZollSurface surface{zoll::HParam(eps)};
    for (int i = 0; i < cfg.geodesic_count; ++i) {
      double r = 0, heading = 0;
      do {  // non-meridian: Clairaut constant |sin r sin heading| >= 0.1
        r = uniform(rng, 0.1, kPi - 0.1);
        heading = uniform(rng, 0, kTwoPi);
      } while (std::abs(std::sin(r) * std::sin(heading)) < 0.1);
      const auto init = zoll::unit_state(surface, r, uniform(rng, 0, kTwoPi), heading);

      const auto loop = zoll::integrate_geodesic(surface, init, kTwoPi, cfg.geodesic_step);
      worst_closure = std::max(worst_closure, zoll::closure_defect(loop));
      const double C0 = zoll::clairaut(init);
      for (const auto& st : loop) {
        worst_drift = std::max(worst_drift, std::abs(zoll::speed_squared(surface, st) - 1));
        worst_drift = std::max(worst_drift, std::abs(zoll::clairaut(st) - C0));
      }
      const auto longer = zoll::integrate_geodesic(surface, init, kTwoPi + 0.02, cfg.geodesic_step);
      const auto L = zoll::first_return_length(longer, kPi);
      worst_length = std::max(worst_length, L ? std::abs(*L - kTwoPi) : HUGE_VAL);
    }
  }
  out.measurements = {{"closure_defect", worst_closure, cfg.tol.closure, Relation::below},
                      {"return_length_error", worst_length, cfg.tol.return_length, Relation::below},
                      {"invariant_drift", worst_drift, cfg.tol.invariant_drift, Relation::below}};
  return out;
}

CriterionResult round_sphere_limit(const SuiteConfig& cfg) {
  CriterionResult out{9, "round-sphere-limit", {}, {}, {}};
  constexpr double kEps = 1e-9;
  Rng rng = rng_for(cfg, 9);
  const finsler::FinslerMetric m(kEps);
  double worst = 0;
  for (int i = 0; i < cfg.round_samples; ++i) {
    const auto s = random_fiber(rng);
    const double cosR = std::cos(s.R);
    const double expected = std::hypot(s.v1, s.v2 * cosR);
    worst = std::max(worst, std::abs(m.evaluate(s.R, s.v1, s.v2).F - expected));
  }
  double worst_ellipse = 0;
  for_each_indicatrix_point({kEps}, [&](double, double R, double, indicatrix::FiberPoint p) {
    const double cosR = std::cos(R);
    worst_ellipse = std::max(worst_ellipse, std::abs(p.v1 * p.v1 + p.v2 * p.v2 * cosR * cosR - 1));
  });
  out.measurements = {{"norm_deviation", worst, cfg.tol.round_limit, Relation::below},
                      {"ellipse_deviation", worst_ellipse, cfg.tol.round_limit, Relation::below}};
  return out;
}

CriterionResult quartic_oracle(const SuiteConfig& cfg) {
  CriterionResult out{10, "quartic-oracle", {}, {}, {}};
  Rng rng = rng_for(cfg, 10);
  double worst_match = 0;
  for (int i = 0; i < cfg.random_samples; ++i) {
    // Four real roots in [-10, 10], pairwise at least 0.05 apart.
    std::array<double, 4> roots{};
    bool separated = false;
    while (!separated) {
      for (auto& x : roots) x = uniform(rng, -10, 10);
      std::sort(roots.begin(), roots.end());
      separated = roots[1] - roots[0] >= 0.05 && roots[2] - roots[1] >= 0.05 && roots[3] - roots[2] >= 0.05;
    }
    const double a = uniform(rng, 0.5, 2) * (uniform(rng, 0, 1) < 0.5 ? -1 : 1);
    const double e1 = roots[0] + roots[1] + roots[2] + roots[3];
    const double e2 = roots[0] * roots[1] + roots[0] * roots[2] + roots[0] * roots[3] + roots[1] * roots[2] +
                      roots[1] * roots[3] + roots[2] * roots[3];
    const double e3 = roots[0] * roots[1] * roots[2] + roots[0] * roots[1] * roots[3] +
                      roots[0] * roots[2] * roots[3] + roots[1] * roots[2] * roots[3];
    const double e4 = roots[0] * roots[1] * roots[2] * roots[3];
    const auto found = poly::solve_quartic(a, -a * e1, a * e2, -a * e3, a * e4, poly::Refinement::none);
    std::array<double, 4> re{};
    double imag = 0;
    for (int k = 0; k < 4; ++k) {
      re[k] = found[k].real();
      imag = std::max(imag, std::abs(found[k].imag()));
    }
    std::sort(re.begin(), re.end());
    double match = imag;
    for (int k = 0; k < 4; ++k) match = std::max(match, std::abs(re[k] - roots[k]) / std::max(1.0, std::abs(roots[k])));
    worst_match = std::max(worst_match, match);
  }

  double worst_backward = 0;
  double worst_sum = 0;
  double worst_product = 0;
  for (int i = 0; i < cfg.random_samples; ++i) {
    std::array<double, 5> c{};
    do {
      for (auto& x : c) x = uniform(rng, -1e3, 1e3);
    } while (c[0] == 0 || c[4] == 0);
    const poly::Quartic q{c[0], c[1], c[2], c[3], c[4]};
    const auto found = poly::solve_quartic(c[0], c[1], c[2], c[3], c[4]);
    poly::Complex sum = 0, product = 1;
    double abs_sum = 0;
    for (const auto& x : found) {
      worst_backward = std::max(worst_backward, q.backward_error(x));
      sum += x;
      product *= x;
      abs_sum += std::abs(x);
    }
    worst_sum = std::max(worst_sum, std::abs(sum + c[1] / c[0]) / abs_sum);
    worst_product = std::max(worst_product, std::abs(product - c[4] / c[0]) / std::abs(c[4] / c[0]));
  }
  out.measurements = {{"constructed_root_error", worst_match, cfg.tol.quartic_roots, Relation::below},
                      {"backward_error", worst_backward, cfg.tol.backward_error, Relation::below},
                      {"vieta_sum", worst_sum, cfg.tol.quartic_roots, Relation::below},
                      {"vieta_product", worst_product, cfg.tol.quartic_roots, Relation::below}};
  return out;
}

CriterionResult run_criterion(int id, const SuiteConfig& cfg) {
  using Check = CriterionResult (*)(const SuiteConfig&);
  static constexpr Check kChecks[kCriterionCount] = {
      gauss_curvature_positivity, parametric_implicit_identity, integral_identity, radical_formula,
      sign_structure,             finsler_axioms,               constant_flag_curvature,
      zoll_property,              round_sphere_limit,           quartic_oracle};
  static const char* kNames[kCriterionCount] = {
      "gauss-curvature-positivity", "parametric-implicit-identity", "integral-identity",
      "radical-formula",            "sign-structure",               "finsler-axioms",
      "constant-flag-curvature",    "zoll-property",                "round-sphere-limit",
      "quartic-oracle"};
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("criterion id must be in 1..10");
  try {
    return kChecks[id - 1](cfg);
  } catch (const std::exception& e) {
    return CriterionResult{id, kNames[id - 1], {}, e.what(), {}};
  }
}

std::vector<CriterionResult> run_suite(const SuiteConfig& cfg) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, cfg));
  return out;
}

}  // namespace zf::verify
