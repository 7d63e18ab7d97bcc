#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include "zf/errors.hpp"
#include "zf/finsler.hpp"
#include "zf/geodesic.hpp"
#include "zf/indicatrix.hpp"
#include "zf/verify.hpp"
#include "zf/zoll.hpp"

namespace zf::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr double kPi = std::numbers::pi;
constexpr double kChartMargin = 1e-3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest decimal that parses back to the same double.
std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

struct Grid {
  double min = 0;
  double max = 0;
  int count = 0;

  std::vector<double> values() const {
    std::vector<double> out;
    for (int i = 0; i < count; ++i) out.push_back(count == 1 ? min : min + (max - min) * i / (count - 1));
    return out;
  }
  json to_json() const { return {{"min", min}, {"max", max}, {"count", count}}; }
};

Grid parse_grid(const std::string& text, const char* flag) {
  Grid g;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> g.min >> c1 >> g.max >> c2 >> g.count) || c1 != ':' || c2 != ':' || !in.eof() ||
      in.fail())
    throw UsageError(std::string(flag) + ": expected min:max:n, got '" + text + "'");
  if (g.count < 1) throw UsageError(std::string(flag) + ": the grid is empty");
  if (!std::isfinite(g.min) || !std::isfinite(g.max)) throw UsageError(std::string(flag) + ": non-finite bound");
  return g;
}

Grid grid_from_json(const json& j, const char* key) {
  if (j.is_string()) return parse_grid(j.get<std::string>(), key);
  if (j.is_array() && j.size() == 3) {
    Grid g{j[0].get<double>(), j[1].get<double>(), j[2].get<int>()};
    if (g.count < 1) throw UsageError(std::string(key) + ": the grid is empty");
    return g;
  }
  throw UsageError(std::string(key) + ": expected \"min:max:n\" or [min, max, n]");
}

struct RunConfig {
  std::optional<double> epsilon;  // default depends on the command
  double R = 0;
  double theta = 0;
  double v1 = 0;
  double v2 = 1;
  Grid grid_R{-1, 1, 5};
  std::optional<Grid> grid_r;
  verify::Tolerances tol;
  std::uint64_t seed = 0;
  std::optional<std::string> out;
  std::string format = "csv";
  int count = 20;
  double length = 2 * kPi;
  double step = 1e-3;
  std::vector<int> criteria;

  double eps_or_default() const { return epsilon.value_or(0.25); }
  fs::path out_dir() const { return out.value_or("."); }
};

// Raw command-line values; an option only overrides the config file when given.
struct Flags {
  double epsilon = 0, R = 0, theta = 0, v1 = 0, v2 = 0, length = 0, step = 0;
  std::string grid_R, grid_r, out, format, config;
  std::vector<std::string> tol;
  std::uint64_t seed = 0;
  int count = 0;
  std::vector<int> criteria;
};

void set_tolerance(verify::Tolerances& tol, const std::string& name, double value) {
  try {
    tol.set(name, value);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--tol: ") + e.what());
  }
}

void apply_json(const json& j, RunConfig& cfg) {
  if (!j.is_object()) throw UsageError("config: top level must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "epsilon") cfg.epsilon = value.get<double>();
      else if (key == "R") cfg.R = value.get<double>();
      else if (key == "theta") cfg.theta = value.get<double>();
      else if (key == "v1") cfg.v1 = value.get<double>();
      else if (key == "v2") cfg.v2 = value.get<double>();
      else if (key == "grid_R") cfg.grid_R = grid_from_json(value, "grid_R");
      else if (key == "grid_r") cfg.grid_r = grid_from_json(value, "grid_r");
      else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
      else if (key == "out") cfg.out = value.get<std::string>();
      else if (key == "format") cfg.format = value.get<std::string>();
      else if (key == "count") cfg.count = value.get<int>();
      else if (key == "length") cfg.length = value.get<double>();
      else if (key == "step") cfg.step = value.get<double>();
      else if (key == "criteria") cfg.criteria = value.get<std::vector<int>>();
      else if (key == "tol") {
        if (!value.is_object()) throw UsageError("config: tol must be an object of name: value");
        for (const auto& [name, v] : value.items()) set_tolerance(cfg.tol, name, v.get<double>());
      } else {
        throw UsageError("config: unknown key '" + key + "'");
      }
    } catch (const json::exception& e) {
      throw UsageError("config: bad value for '" + key + "': " + e.what());
    }
  }
}

RunConfig build_config(const CLI::App& app, const Flags& f) {
  RunConfig cfg;
  auto given = [&](const char* name) { return app.get_option(name)->count() > 0; };
  if (given("--config")) {
    std::ifstream in(f.config);
    if (!in) throw UsageError("config: cannot open '" + f.config + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw UsageError("config: '" + f.config + "' is not valid JSON: " + e.what());
    }
    apply_json(j, cfg);
  }
  if (given("--epsilon")) cfg.epsilon = f.epsilon;
  if (given("--R")) cfg.R = f.R;
  if (given("--theta")) cfg.theta = f.theta;
  if (given("--v1")) cfg.v1 = f.v1;
  if (given("--v2")) cfg.v2 = f.v2;
  if (given("--grid-R")) cfg.grid_R = parse_grid(f.grid_R, "--grid-R");
  if (given("--grid-r")) cfg.grid_r = parse_grid(f.grid_r, "--grid-r");
  if (given("--seed")) cfg.seed = f.seed;
  if (given("--out")) cfg.out = f.out;
  if (given("--format")) cfg.format = f.format;
  if (given("--count")) cfg.count = f.count;
  if (given("--length")) cfg.length = f.length;
  if (given("--step")) cfg.step = f.step;
  if (given("--criterion")) cfg.criteria = f.criteria;
  for (const auto& item : f.tol) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--tol: expected name=value, got '" + item + "'");
    double value = 0;
    try {
      std::size_t used = 0;
      value = std::stod(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw UsageError("--tol: bad number in '" + item + "'");
    }
    set_tolerance(cfg.tol, item.substr(0, eq), value);
  }

  if (cfg.epsilon && !(*cfg.epsilon > 0 && *cfg.epsilon < 0.5))
    throw UsageError("--epsilon must lie in (0, 1/2), got " + num(*cfg.epsilon));
  if (cfg.format != "csv" && cfg.format != "json") throw UsageError("--format must be csv or json");
  for (double R : cfg.grid_R.values())
    if (!(std::abs(R) <= kPi / 2 - kChartMargin))
      throw UsageError("--grid-R: R = " + num(R) + " outside the chart |R| <= pi/2 - 1e-3");
  if (cfg.count < 1) throw UsageError("--count must be >= 1");
  if (!(cfg.length > 0) || !std::isfinite(cfg.length)) throw UsageError("--length must be positive");
  if (!(cfg.step > 0 && cfg.step <= 1e-2)) throw UsageError("--step must lie in (0, 1e-2]");
  for (int id : cfg.criteria)
    if (id < 1 || id > verify::kCriterionCount) throw UsageError("--criterion must lie in 1..10");
  return cfg;
}

fs::path prepare_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create output directory '" + dir.string() + "': " + ec.message());
  return dir;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path.string() + "' for writing");
  f << text;
  if (!f) throw UsageError("write to '" + path.string() + "' failed");
}

std::string csv_line(std::initializer_list<std::string> cells) {
  std::string line;
  for (const auto& c : cells) {
    if (!line.empty()) line += ',';
    line += c;
  }
  return line + '\n';
}

json complex_json(const poly::Complex& z) { return json::array({z.real(), z.imag()}); }

// eval -------------------------------------------------------------------

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  const double eps = cfg.eps_or_default();
  const finsler::FinslerMetric metric(eps);
  finsler::FinslerEval e;
  try {
    e = metric.evaluate(indicatrix::TangentSample{cfg.R, cfg.theta, cfg.v1, cfg.v2});
  } catch (const DomainError& ex) {
    throw UsageError(ex.what());
  }
  bool ok = e.trusted;

  json report = {{"epsilon", eps},
                 {"R", cfg.R},
                 {"theta", cfg.theta},
                 {"v1", cfg.v1},
                 {"v2", cfg.v2},
                 {"F", e.F},
                 {"F_polished", e.F_polished},
                 {"residual", e.residual},
                 {"polish_gap", e.polish_gap},
                 {"trusted", e.trusted},
                 {"path", finsler::to_string(e.path)},
                 {"root_pattern", finsler::to_string(e.pattern)},
                 {"coefficients", {{"A", e.coeffs.A}, {"B", e.coeffs.B}, {"C", e.coeffs.C}, {"D", e.coeffs.D},
                                   {"E", e.coeffs.E}}},
                 {"depressed", {{"alpha", e.depressed.alpha}, {"beta", e.depressed.beta},
                                {"gamma", e.depressed.gamma}, {"shift", e.depressed.shift}}},
                 {"resolvent", {{"z1", complex_json(e.resolvent.z1)}, {"z2", complex_json(e.resolvent.z2)},
                                {"z3", complex_json(e.resolvent.z3)}}}};
  try {
    const auto H = metric.hessian(cfg.R, cfg.v1, cfg.v2);
    report["hessian"] = {{"g11", H.g11}, {"g12", H.g12}, {"g22", H.g22}};
    report["hessian_eigs"] = {H.eig_min, H.eig_max};
  } catch (const ConvexityViolation& ex) {
    report["hessian_eigs"] = nullptr;
    report["hessian_error"] = ex.what();
    ok = false;
  }
  try {
    const auto K = metric.flag_curvature(cfg.R, cfg.theta, cfg.v1, cfg.v2);
    report["K"] = K.K;
    report["K_error_estimate"] = K.error_estimate();
  } catch (const std::exception& ex) {
    report["K"] = nullptr;
    report["K_error"] = ex.what();
  }

  if (cfg.format == "json") {
    out << report.dump(2) << '\n';
  } else {
    out << "epsilon,R,theta,v1,v2,F,residual,polish_gap,trusted,eig_min,eig_max,K\n";
    auto cell = [&](const char* key) { return report[key].is_null() ? std::string("nan") : num(report[key]); };
    const auto& eigs = report["hessian_eigs"];
    out << csv_line({num(eps), num(cfg.R), num(cfg.theta), num(cfg.v1), num(cfg.v2), num(e.F), num(e.residual),
                     num(e.polish_gap), e.trusted ? "true" : "false", eigs.is_null() ? "nan" : num(eigs[0]),
                     eigs.is_null() ? "nan" : num(eigs[1]), cell("K")});
  }
  return ok ? kPass : kCheckFailure;
}

// indicatrix ---------------------------------------------------------------

int cmd_indicatrix(const RunConfig& cfg, std::ostream& out) {
  const double eps = cfg.eps_or_default();
  const finsler::FinslerMetric metric(eps);
  const fs::path dir = prepare_dir(cfg.out_dir());
  const auto Rs = cfg.grid_R.values();

  json files = json::array();
  double worst_implicit = 0, worst_F = 0;
  for (std::size_t i = 0; i < Rs.size(); ++i) {
    const double R = Rs[i];
    std::vector<indicatrix::CurvePoint> points;
    if (cfg.grid_r) {
      const double Ra = std::abs(R);
      for (double r : cfg.grid_r->values()) {
        if (r < Ra || r > kPi - Ra) continue;
        for (auto b : {indicatrix::Branch::plus, indicatrix::Branch::minus}) {
          const auto p = indicatrix::indicatrix_point(eps, R, r, b);
          points.push_back({r, p.v1, p.v2});
        }
      }
    } else {
      points = indicatrix::sample_curve(eps, R, 100);
    }

    double max_implicit = 0, max_F = 0;
    json rows = json::array();
    std::string csv = "r,v1,v2,implicit_residual,F_residual\n";
    for (const auto& p : points) {
      const double implicit = indicatrix::implicit_residual(eps, R, p.v1, p.v2);
      const double F_res = metric.evaluate(R, p.v1, p.v2).F - 1;
      max_implicit = std::max(max_implicit, std::abs(implicit));
      max_F = std::max(max_F, std::abs(F_res));
      if (cfg.format == "csv") csv += csv_line({num(p.r), num(p.v1), num(p.v2), num(implicit), num(F_res)});
      else rows.push_back({{"r", p.r}, {"v1", p.v1}, {"v2", p.v2}, {"implicit_residual", implicit},
                           {"F_residual", F_res}});
    }
    char name[64];
    std::snprintf(name, sizeof name, "indicatrix_%03zu.%s", i, cfg.format.c_str());
    if (cfg.format == "csv") write_file(dir / name, csv);
    else write_file(dir / name, json({{"epsilon", eps}, {"R", R}, {"points", rows}}).dump(1) + '\n');

    json entry = {{"R", R},
                  {"file", name},
                  {"points", points.size()},
                  {"max_implicit_residual", max_implicit},
                  {"max_F_residual", max_F}};
    if (!cfg.grid_r) {
      const auto convexity = indicatrix::curve_convexity(points);
      entry["strictly_convex"] = convexity.simple_convex && convexity.encloses_origin;
    }
    files.push_back(entry);
    worst_implicit = std::max(worst_implicit, max_implicit);
    worst_F = std::max(worst_F, max_F);
    out << "R=" << num(R) << "  points=" << points.size() << "  max_implicit_residual=" << num(max_implicit)
        << "  max_F_residual=" << num(max_F) << "  -> " << (dir / name).string() << '\n';
  }

  const bool ok = worst_implicit < cfg.tol.implicit_residual && worst_F < cfg.tol.normalization;
  json summary = {{"epsilon", eps},
                  {"grid_R", cfg.grid_R.to_json()},
                  {"grid_r", cfg.grid_r ? cfg.grid_r->to_json() : json(nullptr)},
                  {"files", files},
                  {"max_implicit_residual", worst_implicit},
                  {"max_F_residual", worst_F},
                  {"tolerances", {{"implicit_residual", cfg.tol.implicit_residual},
                                  {"normalization", cfg.tol.normalization}}},
                  {"passed", ok}};
  write_file(dir / "summary.json", summary.dump(2) + '\n');
  return ok ? kPass : kCheckFailure;
}

// verify -------------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  verify::SuiteConfig suite;
  suite.epsilon = cfg.epsilon;
  suite.seed = cfg.seed;
  suite.tol = cfg.tol;

  std::vector<int> ids = cfg.criteria;
  if (ids.empty())
    for (int id = 1; id <= verify::kCriterionCount; ++id) ids.push_back(id);

  bool all = true;
  json report = json::array();
  for (int id : ids) {
    const auto r = verify::run_criterion(id, suite);
    all = all && r.passed();
    json ms = json::array();
    for (const auto& m : r.measurements)
      ms.push_back({{"name", m.name},
                    {"value", m.value},
                    {"threshold", m.threshold},
                    {"relation", m.relation == verify::Relation::below ? "below" : "above"},
                    {"passed", m.passed()},
                    {"margin", m.relation == verify::Relation::below ? m.threshold - m.value
                                                                     : m.value - m.threshold}});
    json entry = {{"id", r.id}, {"name", r.name}, {"passed", r.passed()}, {"measurements", ms}};
    if (!r.note.empty()) entry["note"] = r.note;
    if (!r.detail.empty()) entry["error"] = r.detail;
    report.push_back(entry);
    if (cfg.format != "json") out << r.summary_line() << '\n';
  }
  json doc = {{"epsilon", cfg.epsilon ? json(*cfg.epsilon) : json(nullptr)},
              {"seed", cfg.seed},
              {"criteria", report},
              {"passed", all}};
  if (cfg.format == "json") out << doc.dump(2) << '\n';
  if (cfg.out) write_file(prepare_dir(*cfg.out) / "verify.json", doc.dump(2) + '\n');
  return all ? kPass : kCheckFailure;
}

// geodesics ----------------------------------------------------------------

int cmd_geodesics(const RunConfig& cfg, std::ostream& out) {
  const double eps = cfg.eps_or_default();
  const zoll::ZollSurface surface{zoll::HParam(eps)};
  const bool closing_run = std::abs(cfg.length - 2 * kPi) < 1e-12;
  const fs::path dir = cfg.out ? prepare_dir(*cfg.out) : fs::path();

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0, 1);

  std::string table = "index,r0,theta0,heading,clairaut,closure_defect,return_length,unit_speed_drift,"
                      "clairaut_drift,error\n";
  bool ok = true;
  double worst = 0;
  for (int k = 0; k < cfg.count; ++k) {
    double r0 = kPi / 2, theta0 = 0, heading = kPi / 2;  // geodesic 0: the equator
    if (k > 0) {
      do {
        r0 = 0.1 + unit(rng) * (kPi - 0.2);
        heading = unit(rng) * 2 * kPi;
      } while (std::abs(std::sin(r0) * std::sin(heading)) < 0.1);
      theta0 = unit(rng) * 2 * kPi;
    }
    const auto init = zoll::unit_state(surface, r0, theta0, heading);
    try {
      const auto traj = zoll::integrate_geodesic(surface, init, cfg.length, cfg.step);
      const double defect = zoll::closure_defect(traj);
      double unit_drift = 0, clairaut_drift = 0;
      for (const auto& st : traj) {
        unit_drift = std::max(unit_drift, std::abs(zoll::speed_squared(surface, st) - 1));
        clairaut_drift = std::max(clairaut_drift, std::abs(zoll::clairaut(st) - zoll::clairaut(init)));
      }
      // The return length needs the trajectory to run a little past 2 pi.
      std::optional<double> L;
      if (cfg.length > kPi) {
        const double span = std::max(cfg.length, 2 * kPi) + 0.02;
        L = zoll::first_return_length(zoll::integrate_geodesic(surface, init, span, cfg.step), kPi);
      }
      worst = std::max(worst, defect);
      if (closing_run && !(defect < cfg.tol.closure)) ok = false;
      table += csv_line({std::to_string(k), num(r0), num(theta0), num(heading), num(zoll::clairaut(init)),
                         num(defect), L ? num(*L) : "", num(unit_drift), num(clairaut_drift), ""});
      if (cfg.out) {
        std::string csv = "s,r,theta,r_dot,theta_dot\n";
        for (const auto& st : traj)
          csv += csv_line({num(st.arclength), num(st.r), num(st.theta), num(st.r_dot), num(st.theta_dot)});
        char name[64];
        std::snprintf(name, sizeof name, "geodesic_%03d.csv", k);
        write_file(dir / name, csv);
      }
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& ex) {
      ok = false;
      std::string msg = ex.what();
      for (auto& ch : msg)
        if (ch == ',' || ch == '\n') ch = ';';
      table += csv_line({std::to_string(k), num(r0), num(theta0), num(heading), num(zoll::clairaut(init)), "",
                         "", "", "", msg});
    }
  }
  if (cfg.out) write_file(dir / "closure.csv", table);
  out << table;
  out << "max_closure_defect=" << num(worst) << (closing_run ? "" : "  (informational: length != 2 pi)") << '\n';
  if (!closing_run) return kPass;
  return ok ? kPass : kCheckFailure;
}

// curvature-scan -----------------------------------------------------------

int cmd_curvature_scan(const RunConfig& cfg, std::ostream& out) {
  const double eps = cfg.eps_or_default();
  const zoll::HParam p(eps);
  const fs::path dir = prepare_dir(cfg.out_dir());

  constexpr int kXPoints = 201;
  double min_G = HUGE_VAL;
  std::string gauss = "x,G,G_general\n";
  for (int i = 0; i < kXPoints; ++i) {
    const double x = -1 + 2.0 * i / (kXPoints - 1);
    const double G = zoll::gauss_curvature(p, x);
    min_G = std::min(min_G, G);
    gauss += csv_line({num(x), num(G), num(zoll::gauss_curvature_general(p, x))});
  }
  write_file(dir / "curvature_gauss.csv", gauss);

  constexpr int kDirections = 8;
  const finsler::FinslerMetric metric(eps);
  double worst = 0;
  std::string flag = "R,theta,v1,v2,K,abs_K_minus_1,error_estimate\n";
  for (double R : cfg.grid_R.values())
    for (int k = 0; k < kDirections; ++k) {
      const double phi = 2 * kPi * (k + 0.5) / kDirections;
      const double v1 = std::cos(phi), v2 = std::sin(phi);
      const auto K = metric.flag_curvature(R, cfg.theta, v1, v2);
      worst = std::max(worst, std::abs(K.K - 1));
      flag += csv_line({num(R), num(cfg.theta), num(v1), num(v2), num(K.K), num(std::abs(K.K - 1)),
                        num(K.error_estimate())});
    }
  write_file(dir / "curvature_flag.csv", flag);

  const bool ok = min_G > 0 && worst < cfg.tol.flag_curvature;
  out << "min_gauss_curvature=" << num(min_G) << "  max_abs_K_minus_1=" << num(worst) << "  ("
      << (ok ? "pass" : "fail") << ")\n";
  return ok ? kPass : kCheckFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zoll metric and its K = 1 Finsler dual: evaluation, export and verification"};
  app.require_subcommand(1, 1);
  Flags f;
  app.add_option("--epsilon", f.epsilon, "deformation parameter in (0, 1/2)");
  app.add_option("--R", f.R, "base point R, |R| < pi/2");
  app.add_option("--theta", f.theta, "base point theta");
  app.add_option("--v1", f.v1, "fiber component along d/dR");
  app.add_option("--v2", f.v2, "fiber component along d/dtheta");
  app.add_option("--grid-R", f.grid_R, "R grid min:max:n (default -1:1:5)");
  app.add_option("--grid-r", f.grid_r, "r grid min:max:n of absolute polar angles");
  app.add_option("--tol", f.tol, "tolerance override name=value (repeatable)");
  app.add_option("--seed", f.seed, "seed for random samples (default 0)");
  app.add_option("--out", f.out, "output directory");
  app.add_option("--format", f.format, "csv or json");
  app.add_option("--config", f.config, "JSON file with the same keys; flags take precedence");
  app.add_option("--count", f.count, "number of geodesics (default 20)");
  app.add_option("--length", f.length, "geodesic length (default 2 pi)");
  app.add_option("--step", f.step, "integration step (default 1e-3)");
  app.add_option("--criterion", f.criteria, "verify: run only these criteria (repeatable)");

  auto* eval = app.add_subcommand("eval", "evaluate F, its Hessian and flag curvature at one point");
  auto* indicatrix = app.add_subcommand("indicatrix", "export indicatrix curves for each R of the grid");
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  auto* geodesics = app.add_subcommand("geodesics", "integrate geodesics and report closure");
  auto* scan = app.add_subcommand("curvature-scan", "tabulate Gauss curvature and flag curvature");
  for (auto* sub : {eval, indicatrix, verify, geodesics, scan}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    const RunConfig cfg = build_config(app, f);
    if (*eval) return cmd_eval(cfg, out);
    if (*indicatrix) return cmd_indicatrix(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*geodesics) return cmd_geodesics(cfg, out);
    return cmd_curvature_scan(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailure;
  }
}

}  // namespace zf::cli
