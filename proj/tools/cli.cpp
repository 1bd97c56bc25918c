#include "silence/cli.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "silence/io.hpp"

namespace silence::cli {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string density;
  std::string out_dir = ".";
  double eta = 0.0;
  std::vector<double> etas{0.2, 0.4, 0.6, 0.8};
  std::string distortion = "mse";
  double tol = 1e-8;
  int max_iter = 20000;
  int grid = 200;
  std::optional<double> start_lo;
  std::optional<double> start_hi;
  double k_min = 0.0;
  double k_max = 4.0;
  int k_steps = 400;
  bool ratio_check = false;
  std::int64_t ticks = 1000000;
  std::uint64_t seed = 1;
  std::optional<double> k;
  std::optional<double> lo;
  std::optional<double> hi;
  std::optional<double> estimate;
  unsigned workers = 1;
};

Density load_density(const std::string& spec) {
  if (spec.empty()) throw InvalidParameter("--density is required");
  if (spec.front() != '@') return density_from_json_text(spec);
  std::ifstream in(spec.substr(1));
  if (!in) throw InvalidParameter("cannot read density file '" + spec.substr(1) + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return density_from_json_text(buffer.str());
}

DistortionKind parse_distortion(const std::string& name) {
  if (name == "mse") return DistortionKind::SquaredError;
  if (name == "mae") return DistortionKind::AbsoluteError;
  throw InvalidParameter("--distortion must be mse or mae");
}

void check_eta(double eta) {
  if (!(eta > 0.0 && eta < 1.0)) throw InvalidParameter("--eta must lie in (0, 1)");
}

fs::path output_path(const RunConfig& cfg, const std::string& name) {
  fs::path dir(cfg.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  return dir / name;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  f << content;
  if (!f) throw std::runtime_error("failed writing '" + path.string() + "'");
}

int cmd_center(const RunConfig& cfg, std::ostream& out) {
  check_eta(cfg.eta);
  if (!(cfg.tol > 0.0)) throw InvalidParameter("--tol must be positive");
  if (cfg.max_iter < 1) throw InvalidParameter("--max-iter must be at least 1");
  Density d = load_density(cfg.density);
  DistortionKind kind = parse_distortion(cfg.distortion);

  Interval start;
  if (cfg.start_lo || cfg.start_hi) {
    if (!(cfg.start_lo && cfg.start_hi)) {
      throw InvalidParameter("--start-lo and --start-hi go together");
    }
    start = Interval(*cfg.start_lo, *cfg.start_hi);
    if (!(d.mass(start) > kMassFloor)) throw InvalidParameter("start interval has no mass");
  } else {
    // Equal-tail member of the sliding family.
    double a = d.quantile(0.5 * (1.0 - cfg.eta));
    start = Interval(a, right_end_for_mass(d, a, cfg.eta));
  }
  CenteringTrace trace = iterate_centering(d, start, cfg.eta, kind, {cfg.tol, cfg.max_iter});

  std::ostringstream csv;
  write_trace_csv(csv, trace);
  write_file(output_path(cfg, "center_trace.csv"), csv.str());

  const SilenceDesign& last = trace.final();
  nlohmann::json summary = {{"density", d.kind()},
                            {"eta", cfg.eta},
                            {"distortion", cfg.distortion},
                            {"start", {start.lo, start.hi}},
                            {"interval", {last.interval.lo, last.interval.hi}},
                            {"estimate", last.estimate},
                            {"mass", last.mass},
                            {"cond_distortion", last.cond_distortion},
                            {"iterations", last.iterations},
                            {"converged", trace.converged},
                            {"fixed_point_gap", trace.fixed_point_gap}};
  write_file(output_path(cfg, "center_summary.json"), summary.dump(2) + "\n");
  out << "interval [" << format_number(last.interval.lo) << ", "
      << format_number(last.interval.hi) << "] " << cfg.distortion << " "
      << format_number(last.cond_distortion) << " after " << last.iterations
      << (trace.converged ? " iterations (converged)\n" : " iterations (not converged)\n");
  return kExitOk;
}

int cmd_families(const RunConfig& cfg, std::ostream& out) {
  if (cfg.etas.empty()) throw InvalidParameter("--eta needs at least one value");
  for (double eta : cfg.etas) check_eta(eta);
  if (cfg.grid < 100) throw InvalidParameter("--grid must be at least 100");
  Density d = load_density(cfg.density);
  FamilySweep sweep = family_sweep(d, cfg.etas, cfg.grid);

  std::ostringstream families;
  write_family_csv(families, sweep);
  write_file(output_path(cfg, "families.csv"), families.str());
  std::ostringstream curves;
  write_curve_csv(curves, sweep);
  write_file(output_path(cfg, "family_curves.csv"), curves.str());
  out << "wrote " << sweep.rows.size() + sweep.optimal.size() << " family rows and "
      << sweep.curves.size() << " curve points\n";
  return kExitOk;
}

int cmd_bound(const RunConfig& cfg, std::ostream& out) {
  if (cfg.k_steps < 2) throw InvalidParameter("--k-steps must be at least 2");
  std::vector<double> ks = make_k_grid(cfg.k_min, cfg.k_max, cfg.k_steps);
  Fig6Curves curves = fig6_sweep(ks);
  std::ostringstream csv;
  write_fig6_csv(csv, curves);
  write_file(output_path(cfg, "fig6.csv"), csv.str());
  if (cfg.ratio_check) {
    double ratio = max_distortion_ratio(curves.exact_gaussian);
    out << "max gaussian/periodic distortion ratio over rates [0.3, 0.9]: "
        << format_number(ratio) << (ratio < 1.0 / 3.0 ? " (< 1/3)\n" : " (>= 1/3)\n");
  }
  return kExitOk;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.ticks < 1) throw InvalidParameter("--ticks must be at least 1");
  Density d = load_density(cfg.density);
  DistortionKind kind = parse_distortion(cfg.distortion);

  int selectors = (cfg.k ? 1 : 0) + ((cfg.lo || cfg.hi) ? 1 : 0) + (cfg.eta != 0.0 ? 1 : 0);
  if (selectors != 1) {
    throw InvalidParameter("choose the silence interval with exactly one of --k, --lo/--hi, --eta");
  }
  Interval silence;
  if (cfg.k) {
    if (!(*cfg.k >= 0.0)) throw InvalidParameter("--k must be non-negative");
    silence = Interval(d.mode() - *cfg.k, d.mode() + *cfg.k).clipped_to(d.support());
  } else if (cfg.lo || cfg.hi) {
    if (!(cfg.lo && cfg.hi)) throw InvalidParameter("--lo and --hi go together");
    silence = Interval(*cfg.lo, *cfg.hi);
  } else {
    check_eta(cfg.eta);
    silence = brute_force_optimal(d, cfg.eta, kind, cfg.grid).design.interval;
  }
  double estimate = 0.0;
  if (cfg.estimate) {
    estimate = *cfg.estimate;
  } else if (d.mass(silence) > kMassFloor) {
    estimate = best_estimate(d, silence, kind);
  } else {
    estimate = std::clamp(d.mode(), silence.lo, silence.hi);
  }
  SimReport report = simulate(d, silence, estimate, static_cast<std::uint64_t>(cfg.ticks),
                              cfg.seed, cfg.workers);
  write_file(output_path(cfg, "simulate.json"), to_json(report).dump(2) + "\n");
  out << "rate " << format_number(report.empirical_rate) << " +- "
      << format_number(report.standard_errors.rate) << ", mse "
      << format_number(report.empirical_mse) << " +- "
      << format_number(report.standard_errors.mse) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Silence-interval design for probabilistic sampling"};
  app.require_subcommand(1);

  auto add_density = [&](CLI::App* sub) {
    sub->add_option("--density", cfg.density, "density JSON, or @path to a JSON file")
        ->required();
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_dir, "output directory")->capture_default_str();
  };

  CLI::App* center = app.add_subcommand("center", "iterate the centering map to a fixed point");
  add_density(center);
  add_out(center);
  center->add_option("--eta", cfg.eta, "silence probability")->required();
  center->add_option("--distortion", cfg.distortion, "mse or mae")->capture_default_str();
  center->add_option("--tol", cfg.tol)->capture_default_str();
  center->add_option("--max-iter", cfg.max_iter)->capture_default_str();
  center->add_option("--start-lo", cfg.start_lo);
  center->add_option("--start-hi", cfg.start_hi);

  CLI::App* families = app.add_subcommand("families", "heuristic interval families vs optimum");
  add_density(families);
  add_out(families);
  families->add_option("--eta", cfg.etas, "silence probabilities")
      ->delimiter(',')
      ->capture_default_str();
  families->add_option("--grid", cfg.grid)->capture_default_str();

  CLI::App* bound = app.add_subcommand("bound", "Gauss-inequality bound and exact curves");
  add_out(bound);
  bound->add_option("--k-min", cfg.k_min)->capture_default_str();
  bound->add_option("--k-max", cfg.k_max)->capture_default_str();
  bound->add_option("--k-steps", cfg.k_steps)->capture_default_str();
  bound->add_flag("--ratio-check", cfg.ratio_check,
                  "print the worst gaussian/periodic distortion ratio for rates in [0.3, 0.9]");

  CLI::App* sim = app.add_subcommand("simulate", "Monte-Carlo check of a silence interval");
  add_density(sim);
  add_out(sim);
  sim->add_option("--ticks", cfg.ticks)->capture_default_str();
  sim->add_option("--seed", cfg.seed)->capture_default_str();
  sim->add_option("--k", cfg.k, "silence half-width about the mode");
  sim->add_option("--lo", cfg.lo);
  sim->add_option("--hi", cfg.hi);
  sim->add_option("--eta", cfg.eta, "use the optimal interval for this mass");
  sim->add_option("--estimate", cfg.estimate);
  sim->add_option("--distortion", cfg.distortion)->capture_default_str();
  sim->add_option("--grid", cfg.grid)->capture_default_str();
  sim->add_option("--workers", cfg.workers)->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  }

  try {
    if (center->parsed()) return cmd_center(cfg, out);
    if (families->parsed()) return cmd_families(cfg, out);
    if (bound->parsed()) return cmd_bound(cfg, out);
    if (sim->parsed()) return cmd_simulate(cfg, out);
  } catch (const InvalidParameter& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const NullMass& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace silence::cli
