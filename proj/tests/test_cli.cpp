#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace fs = std::filesystem;
using zf::cli::ExitCode;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = zf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("zf_cli_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval reports F and exits zero on a trusted point") {
  auto r = run({"eval", "--epsilon", "0.25", "--R", "0", "--v1", "0", "--v2", "1", "--format", "json"});
  CHECK(r.code == ExitCode::kPass);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["F"].get<double>() == doctest::Approx(1));
  CHECK(j["trusted"].get<bool>());
}

TEST_CASE("eval in csv form") {
  auto r = run({"eval", "--epsilon", "0.3", "--R", "0.4", "--v1", "0.5", "--v2", "-0.2"});
  CHECK(r.code == ExitCode::kPass);
  CHECK(r.out.find("F") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({"eval", "--epsilon", "0.6"}).code == ExitCode::kUsageError);
  CHECK(run({"eval", "--epsilon", "0"}).code == ExitCode::kUsageError);
  CHECK(run({"eval", "--R", "2"}).code == ExitCode::kUsageError);
  CHECK(run({"eval", "--format", "xml"}).code == ExitCode::kUsageError);
  CHECK(run({"indicatrix", "--grid-R", "1:0:0"}).code == ExitCode::kUsageError);
  CHECK(run({"verify", "--criterion", "11"}).code == ExitCode::kUsageError);
  CHECK(run({"verify", "--tol", "nonsense=1"}).code == ExitCode::kUsageError);
  CHECK(run({"geodesics", "--step", "0.5"}).code == ExitCode::kUsageError);
  CHECK(run({"frobnicate"}).code == ExitCode::kUsageError);
  CHECK(run({}).code == ExitCode::kUsageError);
}

TEST_CASE("indicatrix writes one file per R and a summary") {
  auto dir = fresh_dir("indicatrix");
  auto r = run({"indicatrix", "--epsilon", "0.25", "--grid-R", "-1:1:3", "--out", dir.string()});
  CHECK(r.code == ExitCode::kPass);
  for (const char* f : {"indicatrix_000.csv", "indicatrix_001.csv", "indicatrix_002.csv", "summary.json"})
    CHECK(fs::exists(dir / f));
  auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
  CHECK(summary["passed"].get<bool>());
  CHECK(summary["files"].size() == 3);
  CHECK(summary["files"][0]["strictly_convex"].get<bool>());
  fs::remove_all(dir);
}

TEST_CASE("indicatrix output is deterministic") {
  auto a = fresh_dir("det_a"), b = fresh_dir("det_b");
  run({"indicatrix", "--epsilon", "0.4", "--grid-R", "0.5:0.5:1", "--out", a.string()});
  run({"indicatrix", "--epsilon", "0.4", "--grid-R", "0.5:0.5:1", "--out", b.string()});
  CHECK(slurp(a / "indicatrix_000.csv") == slurp(b / "indicatrix_000.csv"));
  CHECK(!slurp(a / "indicatrix_000.csv").empty());
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("config file values are overridden by flags") {
  auto dir = fresh_dir("config");
  fs::create_directories(dir);
  {
    std::ofstream cfg(dir / "cfg.json");
    cfg << R"({"epsilon": 0.1, "R": 0.0, "v1": 0.0, "v2": 1.0, "format": "json"})";
  }
  auto base = run({"eval", "--config", (dir / "cfg.json").string()});
  REQUIRE(base.code == ExitCode::kPass);
  CHECK(nlohmann::json::parse(base.out)["epsilon"].get<double>() == doctest::Approx(0.1));
  auto over = run({"eval", "--config", (dir / "cfg.json").string(), "--epsilon", "0.3"});
  REQUIRE(over.code == ExitCode::kPass);
  CHECK(nlohmann::json::parse(over.out)["epsilon"].get<double>() == doctest::Approx(0.3));

  {
    std::ofstream bad(dir / "bad.json");
    bad << R"({"epsilon": 0.1, "colour": "blue"})";
  }
  CHECK(run({"eval", "--config", (dir / "bad.json").string()}).code == ExitCode::kUsageError);
  CHECK(run({"eval", "--config", (dir / "missing.json").string()}).code == ExitCode::kUsageError);
  fs::remove_all(dir);
}

TEST_CASE("verify runs selected criteria and reports failures") {
  auto ok = run({"verify", "--criterion", "1", "--criterion", "2"});
  CHECK(ok.code == ExitCode::kPass);
  CHECK(ok.out.find("PASS") != std::string::npos);
  auto strict = run({"verify", "--criterion", "1", "--tol", "gauss_agreement=1e-30"});
  CHECK(strict.code == ExitCode::kCheckFailure);
  CHECK(strict.out.find("FAIL") != std::string::npos);
}

TEST_CASE("verify writes a JSON report") {
  auto dir = fresh_dir("verify");
  auto r = run({"verify", "--criterion", "9", "--out", dir.string()});
  CHECK(r.code == ExitCode::kPass);
  auto doc = nlohmann::json::parse(slurp(dir / "verify.json"));
  CHECK(doc["passed"].get<bool>());
  CHECK(doc["criteria"][0]["id"].get<int>() == 9);
  fs::remove_all(dir);
}

TEST_CASE("geodesics close and are written out") {
  auto dir = fresh_dir("geodesics");
  auto r = run({"geodesics", "--epsilon", "0.3", "--count", "3", "--out", dir.string()});
  CHECK(r.code == ExitCode::kPass);
  CHECK(fs::exists(dir / "closure.csv"));
  CHECK(fs::exists(dir / "geodesic_000.csv"));
  CHECK(fs::exists(dir / "geodesic_002.csv"));
  fs::remove_all(dir);
}

TEST_CASE("curvature scan") {
  auto dir = fresh_dir("scan");
  auto r = run({"curvature-scan", "--epsilon", "0.25", "--grid-R", "-0.5:0.5:2", "--out", dir.string()});
  CHECK(r.code == ExitCode::kPass);
  CHECK(fs::exists(dir / "curvature_gauss.csv"));
  CHECK(fs::exists(dir / "curvature_flag.csv"));
  fs::remove_all(dir);
}

}  // TEST_SUITE
