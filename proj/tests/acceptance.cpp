// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance 3 7        run only the listed criteria
//
// Exit status is 0 iff every selected criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "silence/bounds.hpp"
#include "silence/heuristics.hpp"
#include "silence/simulator.hpp"
#include "test_support.hpp"

using namespace silence;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

constexpr DistortionKind kBoth[] = {DistortionKind::SquaredError, DistortionKind::AbsoluteError};

Interval random_start(const Density& d, double eta, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double p_lo = 1e-7 + u(rng) * (1.0 - eta - 2e-7);
  double p_hi = p_lo + eta + u(rng) * (1.0 - 1e-7 - p_lo - eta);
  return {d.quantile(p_lo), d.quantile(p_hi)};
}

// Shared by criteria 1, 2 and 4.
std::vector<CenteringTrace> exponential_runs(std::vector<Interval>* starts = nullptr) {
  Density e = make_density("exponential", {{"lambda", 1.0}});
  std::mt19937_64 rng(101);
  std::vector<CenteringTrace> out;
  for (int i = 0; i < 20; ++i) {
    Interval start = random_start(e, 0.75, rng);
    if (starts) starts->push_back(start);
    out.push_back(iterate_centering(e, start, 0.75, DistortionKind::SquaredError));
  }
  return out;
}

std::vector<Density> oracle_densities() {
  return {make_density("gaussian"),           make_density("exponential"),
          make_density("rayleigh", {{"sigma", 8.0}}), make_density("unbalanced-laplace"),
          make_density("triangular"),         make_density("circular-arc")};
}

constexpr double kOracleEtas[] = {0.2, 0.4, 0.6, 0.75, 0.8};

Verdict criterion1() {
  auto t0 = Clock::now();
  auto runs = exponential_runs();
  double elapsed = seconds_since(t0);
  Verdict v;
  double worst = 0.0;
  int most = 0;
  for (const CenteringTrace& t : runs) {
    const Interval& iv = t.final().interval;
    double err = std::max(std::abs(iv.lo), std::abs(iv.hi - std::log(4.0)));
    worst = std::max(worst, err);
    most = std::max(most, t.final().iterations);
    if (!t.converged || err > 1e-6 || t.final().iterations > 15) v.pass = false;
  }
  if (elapsed >= 1.0) v.pass = false;
  v.detail = "20 starts, max endpoint error " + fmt("%.2e", worst) + ", max iterations " +
             std::to_string(most) + ", " + fmt("%.3f", elapsed) + " s";
  return v;
}

Verdict criterion2() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(202);
  Verdict v;
  double worst = 0.0;
  int cases = 0;
  for (const Density& d : oracle_densities()) {
    for (double eta : kOracleEtas) {
      for (DistortionKind kind : kBoth) {
        double opt = brute_force_optimal(d, eta, kind).design.cond_distortion;
        CenteringTrace t = iterate_centering(d, random_start(d, eta, rng), eta, kind);
        double rel = std::abs(t.final().cond_distortion - opt) / opt;
        worst = std::max(worst, rel);
        if (!(rel <= 1e-6)) v.pass = false;
        ++cases;
      }
    }
  }
  double elapsed = seconds_since(t0);
  if (elapsed >= 30.0) v.pass = false;
  v.detail = std::to_string(cases) + " cases, max relative gap " + fmt("%.2e", worst) + ", " +
             fmt("%.2f", elapsed) + " s";
  return v;
}

Verdict criterion3() {
  Verdict v;
  double worst_ineq = kInf;
  std::mt19937_64 rng(303);
  for (const Density& d : testing::catalog()) {
    for (int i = 0; i < 500; ++i) {
      Interval iv = testing::random_interval(d, rng);
      double gm = std::sqrt(d.pdf(iv.lo) * d.pdf(iv.hi));
      ConditionalSummary s = conditional_summary(d, iv);
      worst_ineq = std::min(worst_ineq, s.mass / iv.length() - gm);
      worst_ineq = std::min(worst_ineq, d.pdf(s.cond_median) - gm);
    }
  }
  if (!(worst_ineq >= -1e-9)) v.pass = false;

  double worst_speed = kInf;
  for (const Density& d : testing::catalog()) {
    for (double eta : {0.2, 0.4, 0.6, 0.8}) {
      auto scan = sliding_family_scan(d, eta, 101);
      for (std::size_t i = 1; i < scan.size(); ++i) {
        const ConditionalSummary& p = scan[i - 1].stats;
        const ConditionalSummary& q = scan[i].stats;
        double da = q.interval.lo - p.interval.lo;
        double mid = (q.midpoint - p.midpoint) / da;
        worst_speed = std::min(worst_speed, mid - (q.cond_mean - p.cond_mean) / da);
        worst_speed = std::min(worst_speed, mid - (q.cond_median - p.cond_median) / da);
      }
    }
  }
  if (!(worst_speed >= -1e-6)) v.pass = false;
  v.detail = "min inequality slack " + fmt("%.2e", worst_ineq) + ", min speed-ratio slack " +
             fmt("%.2e", worst_speed);
  return v;
}

Verdict criterion4() {
  Verdict v;
  double worst = -kInf;
  int traces = 0;
  auto check = [&](const Density& d, const Interval& start, const CenteringTrace& t,
                   DistortionKind kind) {
    double prev = describe(d, start, kind).cond_distortion;
    for (const SilenceDesign& s : t.steps) {
      double rise = (s.cond_distortion - prev) / prev;
      worst = std::max(worst, rise);
      if (rise > 1e-9) v.pass = false;
      prev = s.cond_distortion;
    }
    ++traces;
  };
  std::vector<Interval> starts;
  auto runs = exponential_runs(&starts);
  Density e = make_density("exponential", {{"lambda", 1.0}});
  for (std::size_t i = 0; i < runs.size(); ++i) {
    check(e, starts[i], runs[i], DistortionKind::SquaredError);
  }
  std::mt19937_64 rng(202);
  for (const Density& d : oracle_densities()) {
    for (double eta : kOracleEtas) {
      for (DistortionKind kind : kBoth) {
        Interval start = random_start(d, eta, rng);
        check(d, start, iterate_centering(d, start, eta, kind), kind);
      }
    }
  }
  v.detail = std::to_string(traces) + " traces, largest relative step increase " +
             fmt("%.2e", worst);
  return v;
}

Verdict criterion5() {
  Verdict v;
  std::vector<double> ks;
  for (int i = 0; i < 100; ++i) ks.push_back(4.0 * i / 99.0);
  Density uniform = make_density("uniform", {{"lo", -std::numbers::sqrt3}, {"hi", std::numbers::sqrt3}});
  double rate_slack = kInf;
  double dist_slack = kInf;
  std::string first_violation;
  for (const Density& d : {make_density("gaussian"), uniform}) {
    double t = tau(d);
    double first_k = kInf;
    for (const RateDistortionPoint& p : exact_symmetric_curve(d, ks, CurveSource::ExactGaussian)) {
      rate_slack = std::min(rate_slack, gauss_rate_bound(p.k, t) - p.rate);
      double slack = gauss_distortion_bound(p.k, t, d.variance()) - p.distortion;
      dist_slack = std::min(dist_slack, slack);
      if (slack < -1e-12) first_k = std::min(first_k, p.k);
    }
    if (std::isfinite(first_k)) {
      first_violation += " " + d.kind() + " from k=" + fmt("%.3f", first_k);
    }
  }
  if (!(rate_slack >= -1e-12 && dist_slack >= -1e-12)) v.pass = false;

  double k = 2.0 / std::numbers::sqrt3;
  double below = std::nextafter(k, 0.0);
  double above = std::nextafter(k, 2.0);
  double jump_rate = std::abs(gauss_rate_bound(below, 1.0) - gauss_rate_bound(above, 1.0));
  double jump_dist =
      std::abs(gauss_distortion_bound(below, 1.0, 1.0) - gauss_distortion_bound(above, 1.0, 1.0));
  double at = gauss_rate_bound(k, 1.0);
  if (jump_rate > 1e-14 || jump_dist > 1e-14 || std::abs(at - 1.0 / 3.0) > 1e-15) v.pass = false;
  v.detail = "min rate slack " + fmt("%.2e", rate_slack) + ", min distortion slack " +
             fmt("%.2e", dist_slack) + ", branch rate " + fmt("%.17g", at) + ", jumps " +
             fmt("%.1e", jump_rate) + "/" + fmt("%.1e", jump_dist);
  if (!first_violation.empty()) v.detail += ", distortion bound exceeded:" + first_violation;
  return v;
}

Verdict criterion6() {
  auto t0 = Clock::now();
  Fig6Curves curves = fig6_sweep(make_k_grid(0.0, 4.0, 400));
  double ratio = max_distortion_ratio(curves.exact_gaussian, 1.0, 0.3, 0.9);
  double elapsed = seconds_since(t0);
  Verdict v;
  v.pass = ratio < 1.0 / 3.0 && elapsed < 1.0;
  v.detail = "max ratio " + fmt("%.6f", ratio) + " (limit 1/3), " + fmt("%.3f", elapsed) + " s";
  return v;
}

Verdict criterion7() {
  Verdict v;
  std::ifstream in(SILENCE_GOLDEN_DIR "/super_level_slack.json");
  if (!in) return {false, "missing golden file"};
  nlohmann::json golden = nlohmann::json::parse(in);
  std::string failures;
  double worst = 0.0;
  for (const char* kind : {"unbalanced-laplace", "circular-arc", "triangular"}) {
    Density d = make_density(kind);
    for (double eta : {0.2, 0.4, 0.6, 0.8}) {
      double sl = conditional_summary(d, super_level_interval(d, eta)).cond_variance;
      double opt = brute_force_optimal(d, eta, DistortionKind::SquaredError).design.cond_distortion;
      double slack = sl / opt - 1.0;
      worst = std::max(worst, slack);
      double recorded = golden.at("slack").at(kind).at(fmt("%.1f", eta)).get<double>();
      double limit = std::min(0.05, recorded * (1.0 + 1e-3));
      if (!(slack <= limit)) {
        v.pass = false;
        failures += std::string(" ") + kind + "@" + fmt("%.1f", eta) + "=" + fmt("%.4f", slack);
      }
    }
  }
  v.detail = "max slack " + fmt("%.4f", worst) + " (limit 0.05)";
  if (!failures.empty()) v.detail += ", over limit:" + failures;
  return v;
}

Verdict criterion8() {
  auto t0 = Clock::now();
  Verdict v;
  double worst = 0.0;
  for (const testing::MonteCarloCase& c : testing::monte_carlo_cases()) {
    SilenceDesign opt = brute_force_optimal(c.density, c.eta, c.kind).design;
    ConditionalSummary s = conditional_summary(c.density, opt.interval);
    SimReport r = simulate(c.density, opt.interval, opt.estimate, 1000000, c.seed);
    SimReport again = simulate(c.density, opt.interval, opt.estimate, 1000000, c.seed, 4);
    if (!(r == again)) v.pass = false;
    double z_rate = std::abs(r.empirical_rate - (1.0 - s.mass)) / r.standard_errors.rate;
    double analytic;
    double z_dist;
    if (c.kind == DistortionKind::SquaredError) {
      analytic = s.mass * s.cond_variance;
      z_dist = std::abs(r.empirical_mse - analytic) / r.standard_errors.mse;
    } else {
      analytic = s.mass * s.cond_mad;
      z_dist = std::abs(r.empirical_mae - analytic) / r.standard_errors.mae;
    }
    worst = std::max({worst, z_rate, z_dist});
    if (!(z_rate <= 3.0 && z_dist <= 3.0)) v.pass = false;
  }
  double elapsed = seconds_since(t0);
  if (elapsed >= 60.0) v.pass = false;
  v.detail = "10 configurations, max |z| " + fmt("%.2f", worst) + ", reruns identical, " +
             fmt("%.2f", elapsed) + " s";
  return v;
}

Verdict criterion9() {
  Density u = make_density("uniform", {{"lo", 0.0}, {"hi", 1.0}});
  auto scan = sliding_family_scan(u, 0.5, 200);
  double lo = kInf, hi = -kInf;
  for (const ScanEntry& e : scan) {
    lo = std::min(lo, e.stats.cond_variance);
    hi = std::max(hi, e.stats.cond_variance);
  }
  OptimalDesign opt = brute_force_optimal(u, 0.5, DistortionKind::SquaredError);
  Verdict v;
  v.pass = hi - lo < 1e-10 && opt.valley_width > 0.0;
  v.detail = "distortion spread " + fmt("%.2e", hi - lo) + ", valley width " +
             fmt("%.6f", opt.valley_width);
  return v;
}

const std::vector<std::pair<const char*, std::function<Verdict()>>>& criteria() {
  static const std::vector<std::pair<const char*, std::function<Verdict()>>> all{
      {"centering fixed point, exponential", criterion1},
      {"oracle equivalence", criterion2},
      {"inequality suite", criterion3},
      {"monotone distortion", criterion4},
      {"Gauss bound dominance", criterion5},
      {"headline distortion ratio", criterion6},
      {"super-level near-optimality", criterion7},
      {"Monte-Carlo agreement", criterion8},
      {"uniform flat valley", criterion9},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    int n = std::atoi(argv[i]);
    if (n < 1 || n > static_cast<int>(criteria().size())) {
      std::fprintf(stderr, "unknown criterion '%s'\n", argv[i]);
      return 2;
    }
    selected.push_back(n);
  }
  if (selected.empty()) {
    for (std::size_t n = 1; n <= criteria().size(); ++n) selected.push_back(static_cast<int>(n));
  }
  bool all = true;
  for (int n : selected) {
    const auto& [name, run] = criteria()[n - 1];
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    all = all && v.pass;
    std::printf("%s criterion %d (%s): %s\n", v.pass ? "PASS" : "FAIL", n, name, v.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
