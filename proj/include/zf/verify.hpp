#pragma once

// The verification suite: ten criteria, each a property checked over seeded
// random samples or fixed grids.  Shared by `zoll-finsler verify` and the
// acceptance test binary.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zf::verify {

struct Tolerances {
  double gauss_agreement = 1e-12;    // curvature forms, relative
  double implicit_residual = 1e-10;  // parametric points in the implicit equation
  double turning_integral = 1e-8;   // closed form vs quadrature, relative to max(1, |I|)
  double backward_error = 1e-8;      // F in the quartic, relative to the largest monomial
  double polish_agreement = 1e-7;    // |F - Newton(F)| / max(1, F)
  double normalization = 1e-8;       // |F - 1| on the indicatrix
  double resolvent_vieta = 1e-9;     // |z1 z2 z3 + beta^2|, relative
  double homogeneity = 1e-8;
  double flag_curvature = 1e-3;      // |K - 1|
  double closure = 1e-5;             // geodesic closure defect at length 2 pi
  double return_length = 1e-4;       // |first return - 2 pi|
  double invariant_drift = 1e-8;     // unit speed and Clairaut drift along geodesics
  double round_limit = 1e-6;         // F at eps = 1e-9 vs the round-sphere norm
  double quartic_roots = 1e-8;       // radical roots vs constructed roots

  /// Sets a tolerance by field name; throws std::invalid_argument for an unknown
  /// name or a non-positive value.
  void set(const std::string& name, double value);
  static std::vector<std::string> names();
};

struct SuiteConfig {
  /// Replaces every epsilon set with this single value (the round-limit
  /// criterion keeps its own 1e-9).
  std::optional<double> epsilon;
  std::uint64_t seed = 0;
  Tolerances tol;
  int random_samples = 10000;   // criteria 4, 5, 10
  int homogeneity_samples = 1000;
  int curvature_samples = 200;  // per epsilon
  int geodesic_count = 20;      // per epsilon
  double geodesic_step = 1e-3;
  int round_samples = 1000;
};

enum class Relation { below, above };

struct Measurement {
  std::string name;
  double value = 0;
  double threshold = 0;
  Relation relation = Relation::below;

  bool passed() const;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::vector<Measurement> measurements;
  std::string detail;  // set when the check aborted with an exception
  std::string note;    // informational, does not affect the verdict

  bool passed() const;
  /// One line: "PASS  4 radical-formula  backward_error=3e-14 (< 1e-08) ...".
  std::string summary_line() const;
};

constexpr int kCriterionCount = 10;

CriterionResult gauss_curvature_positivity(const SuiteConfig& cfg);
CriterionResult parametric_implicit_identity(const SuiteConfig& cfg);
CriterionResult integral_identity(const SuiteConfig& cfg);
CriterionResult radical_formula(const SuiteConfig& cfg);
CriterionResult sign_structure(const SuiteConfig& cfg);
CriterionResult finsler_axioms(const SuiteConfig& cfg);
CriterionResult constant_flag_curvature(const SuiteConfig& cfg);
CriterionResult zoll_property(const SuiteConfig& cfg);
CriterionResult round_sphere_limit(const SuiteConfig& cfg);
CriterionResult quartic_oracle(const SuiteConfig& cfg);

/// Runs criterion `id` in 1..10; exceptions become a failed result with detail.
CriterionResult run_criterion(int id, const SuiteConfig& cfg);
std::vector<CriterionResult> run_suite(const SuiteConfig& cfg);

}  // namespace zf::verify
