#include "silence/heuristics.hpp"

#include <algorithm>
#include <cmath>

#include "silence/solvers.hpp"

namespace silence {

namespace {

void check_eta(double eta) {
  if (!(eta > 0.0 && eta < 1.0)) throw InvalidParameter("eta must lie in (0, 1)");
}

// Quantile extended to the closed unit interval via the effective support.
double quantile_or_edge(const Density& d, double p) {
  if (p <= 0.0) return d.effective_support().lo;
  if (p >= 1.0) return d.effective_support().hi;
  return d.quantile(p);
}

// {x : pdf(x) >= level}, using unimodality about the mode.
Interval level_set(const Density& d, double level) {
  const Interval& eff = d.effective_support();
  double mode = d.mode();
  auto at_least = [&](double x) { return d.pdf(x) >= level; };
  double left = predicate_boundary(at_least, eff.lo, mode);
  auto mirrored = [&](double t) { return at_least(-t); };
  double right = -predicate_boundary(mirrored, -eff.hi, -mode);
  return {left, right};
}

// Grows `core` symmetrically inside `outer` until it holds mass eta.
Interval grow_within(const Density& d, const Interval& core, const Interval& outer,
                     double eta) {
  auto grown = [&](double t) {
    return Interval(std::max(outer.lo, core.lo - t), std::min(outer.hi, core.hi + t));
  };
  double t_max = std::max(core.lo - outer.lo, outer.hi - core.hi);
  RootResult r = bisect_monotone([&](double t) { return d.mass(grown(t)); }, 0.0, t_max,
                                 eta, kQuantileTolerance);
  return grown(r.x);
}

}  // namespace

const char* to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::SuperLevel: return "super-level";
    case FamilyKind::EqualSides: return "equal-sides";
    case FamilyKind::EqualAreas: return "equal-areas";
    case FamilyKind::ModeAsConditionalMean: return "mode-as-mean";
  }
  return "unknown";
}

Interval super_level_interval(const Density& d, double eta) {
  check_eta(eta);
  auto mass_at = [&](double level) { return d.mass(level_set(d, level)); };
  double low = 0.0;
  double high = d.peak();
  if (mass_at(high) >= eta) {
    // Flat top holding at least eta: centre the interval in the plateau.
    Interval plateau = level_set(d, high);
    double mid = plateau.midpoint();
    return grow_within(d, Interval(mid, mid), plateau, eta);
  }
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (low + high);
    if (mid <= low || mid >= high) break;
    double m = mass_at(mid);
    if (m >= eta) {
      low = mid;
      if (m - eta <= kQuantileTolerance) break;
    } else {
      high = mid;
    }
  }
  Interval outer = level_set(d, low);
  if (d.mass(outer) - eta <= 1e-9) return outer;
  // Mass jumps at the critical level: fill from the strictly higher set.
  return grow_within(d, level_set(d, high), outer, eta);
}

Interval equal_sides_interval(const Density& d, double eta) {
  check_eta(eta);
  double mode = d.mode();
  const Interval& eff = d.effective_support();
  auto mass_at = [&](double w) { return d.mass(Interval(mode - w, mode + w)); };
  auto slope = [&](double w) { return d.pdf(mode + w) + d.pdf(mode - w); };
  double w_max = std::max(mode - eff.lo, eff.hi - mode);
  RootResult r = solve_monotone(mass_at, slope, 0.0, w_max, eta, kQuantileTolerance);
  return Interval(mode - r.x, mode + r.x).clipped_to(d.support());
}

Interval equal_areas_interval(const Density& d, double eta) {
  check_eta(eta);
  double at_mode = d.cdf(d.mode());
  double half = 0.5 * eta;
  if (at_mode < half) {
    return {quantile_or_edge(d, 0.0), quantile_or_edge(d, eta)};
  }
  if (1.0 - at_mode < half) {
    return {quantile_or_edge(d, 1.0 - eta), quantile_or_edge(d, 1.0)};
  }
  return {quantile_or_edge(d, at_mode - half), quantile_or_edge(d, at_mode + half)};
}

std::optional<Interval> mode_as_mean_interval(const Density& d, double eta, int grid) {
  check_eta(eta);
  if (grid < 2) throw InvalidParameter("mode-as-mean search needs at least 2 grid points");
  double mode = d.mode();
  auto member = [&](double a) { return Interval(a, right_end_for_mass(d, a, eta)); };
  auto g = [&](double a) { return conditional_summary(d, member(a)).cond_mean - mode; };

  Interval range = sliding_family_range(d, eta);
  double step = range.length() / (grid - 1);
  double prev_a = range.lo;
  double prev_g = g(prev_a);
  if (prev_g == 0.0) return member(prev_a);
  for (int i = 1; i < grid; ++i) {
    double a = i + 1 == grid ? range.hi : range.lo + i * step;
    double ga = g(a);
    if (ga == 0.0) return member(a);
    if ((prev_g < 0.0) != (ga < 0.0)) {
      double lo = prev_a;
      double hi = a;
      bool lo_negative = prev_g < 0.0;
      while (hi - lo > 1e-10) {
        double mid = 0.5 * (lo + hi);
        double gm = g(mid);
        if (gm == 0.0) return member(mid);
        if ((gm < 0.0) == lo_negative) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      return member(0.5 * (lo + hi));
    }
    prev_a = a;
    prev_g = ga;
  }
  return std::nullopt;
}

std::optional<Interval> family_interval(const Density& d, FamilyKind kind, double eta,
                                        int grid) {
  switch (kind) {
    case FamilyKind::SuperLevel: return super_level_interval(d, eta);
    case FamilyKind::EqualSides: return equal_sides_interval(d, eta);
    case FamilyKind::EqualAreas: return equal_areas_interval(d, eta);
    case FamilyKind::ModeAsConditionalMean: return mode_as_mean_interval(d, eta, grid);
  }
  return std::nullopt;
}

FamilySweep family_sweep(const Density& d, std::vector<double> etas, int grid) {
  if (etas.empty()) throw InvalidParameter("family sweep needs at least one eta");
  for (double eta : etas) check_eta(eta);
  std::sort(etas.begin(), etas.end());
  etas.erase(std::unique(etas.begin(), etas.end()), etas.end());

  FamilySweep sweep;
  sweep.density = d.kind();
  for (double eta : etas) {
    for (FamilyKind family : kAllFamilies) {
      FamilyRow row;
      row.eta = eta;
      row.family = family;
      row.interval = family_interval(d, family, eta, std::max(grid, 2));
      if (row.interval) row.cond_variance = conditional_summary(d, *row.interval).cond_variance;
      sweep.rows.push_back(row);
    }
    sweep.optimal.push_back(
        brute_force_optimal(d, eta, DistortionKind::SquaredError, std::max(grid, 100)).design);
    for (const ScanEntry& e : sliding_family_scan(d, eta, grid)) {
      sweep.curves.push_back({eta, e.stats.interval.lo, e.stats.cond_variance});
    }
  }
  return sweep;
}

}  // namespace silence
