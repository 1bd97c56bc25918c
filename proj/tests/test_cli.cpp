#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "silence/cli.hpp"
#include "silence/io.hpp"
#include "test_support.hpp"

using namespace silence;
namespace fs = std::filesystem;

namespace {

const std::string kExponential = R"({"kind":"exponential","params":{"lambda":1}})";
const std::string kGaussian = R"({"kind":"gaussian","params":{"mu":0,"sigma":1}})";
const std::string kTriangular = R"({"kind":"triangular"})";

// Fresh output directory under the system temp dir, removed on scope exit.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("silence_cli_" + tag + "_" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string str() const { return path.string(); }
};

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "silence");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(slurp(p));
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("center on the exponential") {
  TempDir dir("center");
  Outcome o = run({"center", "--density", kExponential, "--eta", "0.75", "--distortion", "mse",
                   "--out", dir.str()});
  REQUIRE(o.code == cli::kExitOk);
  auto summary = nlohmann::json::parse(slurp(dir.path / "center_summary.json"));
  CHECK(std::abs(summary.at("interval")[0].get<double>()) < 1e-6);
  CHECK(std::abs(summary.at("interval")[1].get<double>() - 1.386294) < 1e-6);
  CHECK(summary.at("converged").get<bool>());
  CHECK(summary.at("iterations").get<int>() >= 1);
  auto trace = read_csv(dir.path / "center_trace.csv");
  CHECK(trace[0] == std::vector<std::string>{"iter", "lo", "hi", "estimate", "mass",
                                             "cond_distortion"});
  CHECK(trace.size() == summary.at("iterations").get<std::size_t>() + 1);
}

TEST_CASE("center reads the density from a file") {
  TempDir dir("center_file");
  fs::path cfg = dir.path / "density.json";
  std::ofstream(cfg) << kGaussian;
  Outcome o = run({"center", "--density", "@" + cfg.string(), "--eta", "0.5", "--distortion",
                   "mae", "--out", dir.str()});
  REQUIRE(o.code == cli::kExitOk);
  auto summary = nlohmann::json::parse(slurp(dir.path / "center_summary.json"));
  double lo = summary.at("interval")[0].get<double>();
  double hi = summary.at("interval")[1].get<double>();
  CHECK(std::abs(lo + hi) < 1e-6);
  CHECK(hi == doctest::Approx(testing::normal_quantile(0.75)).epsilon(1e-6));
}

TEST_CASE("center error paths") {
  TempDir dir("center_err");
  CHECK(run({"center", "--density", kExponential, "--eta", "1.5", "--out", dir.str()}).code ==
        cli::kExitInvalidConfig);
  CHECK(run({"center", "--density", kExponential, "--eta", "0.5", "--distortion", "l3", "--out",
             dir.str()})
            .code == cli::kExitInvalidConfig);
  CHECK(run({"center", "--density", R"({"kind":"cauchy"})", "--eta", "0.5", "--out", dir.str()})
            .code == cli::kExitInvalidConfig);
  CHECK(run({"center", "--density", "@/nonexistent/d.json", "--eta", "0.5"}).code ==
        cli::kExitInvalidConfig);
  CHECK(run({"center", "--eta", "0.5"}).code == cli::kExitInvalidConfig);
  CHECK(run({"center", "--density", kExponential, "--eta", "0.5", "--tol", "0", "--out",
             dir.str()})
            .code == cli::kExitInvalidConfig);
  CHECK(run({"center", "--density", kExponential, "--eta", "0.5", "--start-lo", "0", "--out",
             dir.str()})
            .code == cli::kExitInvalidConfig);
  CHECK(run({"center", "--density", kExponential, "--eta", "0.5", "--start-lo", "-3",
             "--start-hi", "-2", "--out", dir.str()})
            .code == cli::kExitInvalidConfig);
  Outcome infeasible = run({"center", "--density", kExponential, "--eta", "0.9999999999999",
                            "--out", dir.str()});
  CHECK(infeasible.code == cli::kExitInfeasible);
  CHECK_FALSE(infeasible.err.empty());
  CHECK(run({}).code == cli::kExitInvalidConfig);
  CHECK(run({"bogus"}).code == cli::kExitInvalidConfig);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("families on the triangular density") {
  TempDir dir("families");
  Outcome o = run({"families", "--density", kTriangular, "--eta", "0.2,0.4,0.6,0.8", "--out",
                   dir.str()});
  REQUIRE(o.code == cli::kExitOk);
  auto rows = read_csv(dir.path / "families.csv");
  CHECK(rows[0] == std::vector<std::string>{"density", "eta", "family", "lo", "hi",
                                            "cond_variance"});
  REQUIRE(rows.size() == 1 + 4 * 5);
  Density tri = make_density("triangular");
  for (int e = 0; e < 4; ++e) {
    double eta = 0.2 * (e + 1);
    double best = kInf;
    for (int f = 0; f < 5; ++f) {
      const auto& r = rows[1 + e * 5 + f];
      CHECK(std::stod(r[1]) == doctest::Approx(eta));
      if (r[5] != "absent") best = std::min(best, std::stod(r[5]));
    }
    double oracle =
        brute_force_optimal(tri, eta, DistortionKind::SquaredError).design.cond_distortion;
    CHECK(std::abs(best - oracle) <= 1e-6 * oracle);
  }
  auto curves = read_csv(dir.path / "family_curves.csv");
  CHECK(curves.size() == 1 + 4 * 200);
}

TEST_CASE("families on symmetric and edge-mode densities") {
  TempDir dir("families_sym");
  REQUIRE(run({"families", "--density", kGaussian, "--eta", "0.5", "--out", dir.str()}).code ==
          cli::kExitOk);
  auto rows = read_csv(dir.path / "families.csv");
  REQUIRE(rows.size() == 6);
  for (int i = 2; i <= 5; ++i) {
    CHECK(std::abs(std::stod(rows[i][3]) - std::stod(rows[1][3])) < 1e-6);
    CHECK(std::abs(std::stod(rows[i][4]) - std::stod(rows[1][4])) < 1e-6);
  }
  REQUIRE(run({"families", "--density", kExponential, "--out", dir.str()}).code == cli::kExitOk);
  rows = read_csv(dir.path / "families.csv");
  int absent = 0;
  for (const auto& r : rows) {
    if (r[2] == "mode-as-mean") {
      CHECK(r[3] == "absent");
      ++absent;
    }
  }
  CHECK(absent == 4);
  CHECK(run({"families", "--density", kGaussian, "--grid", "50", "--out", dir.str()}).code ==
        cli::kExitInvalidConfig);
  CHECK(run({"families", "--density", kGaussian, "--eta", "0.2,1", "--out", dir.str()}).code ==
        cli::kExitInvalidConfig);
}

TEST_CASE("bound sweep") {
  TempDir dir("bound");
  Outcome o = run({"bound", "--ratio-check", "--out", dir.str()});
  REQUIRE(o.code == cli::kExitOk);
  CHECK(o.out.find("(< 1/3)") != std::string::npos);
  auto rows = read_csv(dir.path / "fig6.csv");
  CHECK(rows[0] == std::vector<std::string>{"source", "k", "rate", "distortion"});
  bool branch = false, zero = false;
  for (const auto& r : rows) {
    if (r[0] == "GaussBound" && r[1] == format_number(2.0 / std::sqrt(3.0))) {
      branch = true;
      CHECK(std::stod(r[2]) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    }
    if (r[0] == "ExactGaussian" && r[1] == "0") {
      zero = true;
      CHECK(r[3] == "0");
    }
  }
  CHECK(branch);
  CHECK(zero);
  CHECK(run({"bound", "--k-min", "2", "--k-max", "1", "--out", dir.str()}).code ==
        cli::kExitInvalidConfig);
  CHECK(run({"bound", "--k-steps", "1", "--out", dir.str()}).code == cli::kExitInvalidConfig);
}

TEST_CASE("simulate") {
  TempDir a("sim_a"), b("sim_b");
  std::vector<std::string> args{"simulate", "--density", kGaussian, "--k", "1", "--ticks",
                                "1000000", "--seed", "11"};
  auto with_out = [&](const TempDir& d) {
    auto v = args;
    v.insert(v.end(), {"--out", d.str()});
    return v;
  };
  REQUIRE(run(with_out(a)).code == cli::kExitOk);
  REQUIRE(run(with_out(b)).code == cli::kExitOk);
  std::string ja = slurp(a.path / "simulate.json");
  CHECK(ja == slurp(b.path / "simulate.json"));
  auto report = nlohmann::json::parse(ja);
  double rate = report.at("empirical_rate").get<double>();
  double se = report.at("standard_errors").at("rate").get<double>();
  CHECK(std::abs(rate - 0.31731) <= 3.0 * se);

  TempDir c("sim_c");
  CHECK(run({"simulate", "--density", kGaussian, "--k", "1", "--ticks", "0", "--out", c.str()})
            .code == cli::kExitInvalidConfig);
  CHECK(run({"simulate", "--density", kGaussian, "--ticks", "10", "--out", c.str()}).code ==
        cli::kExitInvalidConfig);
  CHECK(run({"simulate", "--density", kGaussian, "--k", "1", "--eta", "0.5", "--out", c.str()})
            .code == cli::kExitInvalidConfig);
  CHECK(run({"simulate", "--density", kGaussian, "--lo", "0", "--ticks", "10", "--out", c.str()})
            .code == cli::kExitInvalidConfig);
  REQUIRE(run({"simulate", "--density", kExponential, "--eta", "0.75", "--ticks", "20000",
               "--workers", "3", "--out", c.str()})
              .code == cli::kExitOk);
  REQUIRE(run({"simulate", "--density", kExponential, "--lo", "0", "--hi", "1", "--ticks",
               "20000", "--out", c.str()})
              .code == cli::kExitOk);
}
