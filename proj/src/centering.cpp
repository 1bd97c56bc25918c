#include "silence/centering.hpp"

#include <algorithm>
#include <cmath>

#include "silence/solvers.hpp"

namespace silence {

namespace {

double distortion_of(const ConditionalSummary& s, DistortionKind kind) {
  return kind == DistortionKind::SquaredError ? s.cond_variance : s.cond_mad;
}

// Smallest r with mass([center - r, center + r]) >= eta.
double symmetric_radius(const Density& d, double center, double eta) {
  const Interval& eff = d.effective_support();
  double r_max = std::max(center - eff.lo, eff.hi - center);
  auto mass_at = [&](double r) { return d.mass(Interval(center - r, center + r)); };
  auto slope = [&](double r) { return d.pdf(center + r) + d.pdf(center - r); };
  RootResult root = solve_monotone(mass_at, slope, 0.0, r_max, eta, kQuantileTolerance);
  return root.x;
}

SilenceDesign center_once(const Density& d, const Interval& iv, double eta,
                          DistortionKind kind, int iterations) {
  double estimate = best_estimate(d, iv, kind);
  double r = symmetric_radius(d, estimate, eta);
  Interval centered = Interval(estimate - r, estimate + r).clipped_to(d.support());
  return describe(d, centered, kind, iterations);
}

void check_eta(double eta) {
  if (!(eta > 0.0 && eta < 1.0)) throw InvalidParameter("eta must lie in (0, 1)");
  if (eta > 1.0 - kMassFloor) throw Infeasible("eta leaves no room for sampling");
}

double endpoint_gap(const Interval& a, const Interval& b) {
  return std::max(std::abs(a.lo - b.lo), std::abs(a.hi - b.hi));
}

}  // namespace

double best_estimate(const Density& d, const Interval& iv, DistortionKind kind) {
  ConditionalSummary s = conditional_summary(d, iv);
  return kind == DistortionKind::SquaredError ? s.cond_mean : s.cond_median;
}

SilenceDesign describe(const Density& d, const Interval& iv, DistortionKind kind,
                       int iterations) {
  ConditionalSummary s = conditional_summary(d, iv);
  SilenceDesign design;
  design.interval = iv;
  design.mass = s.mass;
  design.distortion_kind = kind;
  design.estimate = kind == DistortionKind::SquaredError ? s.cond_mean : s.cond_median;
  design.cond_distortion = distortion_of(s, kind);
  design.iterations = iterations;
  return design;
}

SilenceDesign centering_step(const Density& d, const Interval& iv, double eta,
                             DistortionKind kind) {
  check_eta(eta);
  return center_once(d, iv, eta, kind, 1);
}

CenteringTrace iterate_centering(const Density& d, const Interval& start, double eta,
                                 DistortionKind kind, const CenteringOptions& options) {
  check_eta(eta);
  if (!(options.tol > 0.0)) throw InvalidParameter("tolerance must be positive");
  if (options.max_iter < 1) throw InvalidParameter("max_iter must be at least 1");
  CenteringTrace trace;
  Interval previous = start.clipped_to(d.effective_support());
  Interval current = start;
  for (int it = 1; it <= options.max_iter; ++it) {
    SilenceDesign next = center_once(d, current, eta, kind, it);
    trace.fixed_point_gap =
        endpoint_gap(next.interval.clipped_to(d.effective_support()), previous);
    trace.steps.push_back(next);
    current = next.interval;
    previous = current.clipped_to(d.effective_support());
    if (trace.fixed_point_gap < options.tol) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

OptimalDesign brute_force_optimal(const Density& d, double eta, DistortionKind kind,
                                  int grid) {
  check_eta(eta);
  if (grid < 100) throw InvalidParameter("brute-force scan needs grid >= 100");
  std::vector<ScanEntry> scan = sliding_family_scan(d, eta, grid);
  std::size_t best = 0;
  for (std::size_t i = 1; i < scan.size(); ++i) {
    if (distortion_of(scan[i].stats, kind) < distortion_of(scan[best].stats, kind)) best = i;
  }
  double lo = scan[best == 0 ? 0 : best - 1].stats.interval.lo;
  double hi = scan[std::min(best + 1, scan.size() - 1)].stats.interval.lo;
  auto objective = [&](double a) {
    double b = right_end_for_mass(d, a, eta);
    return distortion_of(conditional_summary(d, Interval(a, b)), kind);
  };
  double xtol = 1e-11 * std::max(1.0, sliding_family_range(d, eta).length());
  MinimumResult refined = golden_section_minimize(objective, lo, hi, xtol);

  OptimalDesign out;
  double a = refined.x;
  out.design = describe(d, Interval(a, right_end_for_mass(d, a, eta)), kind);

  double floor_value = std::min(refined.value, distortion_of(scan[best].stats, kind));
  double valley_lo = kInf;
  double valley_hi = -kInf;
  for (const ScanEntry& e : scan) {
    if (distortion_of(e.stats, kind) <= floor_value + 1e-10) {
      valley_lo = std::min(valley_lo, e.stats.interval.lo);
      valley_hi = std::max(valley_hi, e.stats.interval.lo);
    }
  }
  out.valley_width = valley_hi >= valley_lo ? valley_hi - valley_lo : 0.0;
  return out;
}

bool is_centered(const Density& d, const Interval& iv, DistortionKind kind, double tol) {
  double m = d.mass(iv);
  if (!(m > kMassFloor)) throw NullMass("is_centered requires a positive-mass interval");
  SilenceDesign next = center_once(d, iv, m, kind, 1);
  const Interval& c = next.interval;
  double overlap_lo = std::max(iv.lo, c.lo);
  double overlap_hi = std::min(iv.hi, c.hi);
  double overlap = overlap_hi > overlap_lo ? d.mass(Interval(overlap_lo, overlap_hi)) : 0.0;
  double symmetric_difference = m + d.mass(c) - 2.0 * overlap;
  return symmetric_difference < tol;
}

}  // namespace silence
