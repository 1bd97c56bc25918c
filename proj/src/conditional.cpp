#include "silence/conditional.hpp"

#include <algorithm>
#include <cmath>

namespace silence {

ConditionalSummary conditional_summary(const Density& d, const Interval& iv) {
  double mass = d.mass(iv);
  if (!(mass > kMassFloor)) {
    throw NullMass("conditional statistics requested on a null-mass interval");
  }
  ConditionalSummary s;
  s.interval = iv;
  s.mass = mass;
  s.midpoint = iv.midpoint();

  Interval live = iv.clipped_to(d.effective_support());
  double center = live.midpoint();
  double first = d.partial_expectation([center](double x) { return x - center; }, live);
  s.cond_mean = std::clamp(center + first / mass, live.lo, live.hi);

  double m = s.cond_mean;
  double second = d.partial_expectation([m](double x) { return (x - m) * (x - m); }, live);
  s.cond_variance = std::max(0.0, second / mass);

  double half = d.cdf(iv.lo) + 0.5 * mass;
  s.cond_median = std::clamp(d.quantile(half), live.lo, live.hi);

  double med = s.cond_median;
  double below = d.partial_expectation([med](double x) { return med - x; },
                                       Interval(live.lo, med));
  double above = d.partial_expectation([med](double x) { return x - med; },
                                       Interval(med, live.hi));
  s.cond_mad = std::max(0.0, (below + above) / mass);
  return s;
}

double right_end_for_mass(const Density& d, double a, double eta) {
  if (!(eta > 0.0 && eta < 1.0)) {
    throw InvalidParameter("mass must lie in (0, 1)");
  }
  double target = d.cdf(a) + eta;
  if (target > 1.0 + kQuantileTolerance) {
    throw Infeasible("not enough probability mass to the right of the left end");
  }
  if (target >= 1.0) return d.effective_support().hi;
  return d.quantile(target);
}

Interval sliding_family_range(const Density& d, double eta) {
  if (!(eta > 0.0 && eta < 1.0)) {
    throw InvalidParameter("mass must lie in (0, 1)");
  }
  double lo = std::isfinite(d.support().lo) ? d.support().lo : d.quantile(kScanEpsilon);
  double hi = d.quantile(1.0 - eta);
  return {lo, std::max(lo, hi)};
}

std::vector<ScanEntry> sliding_family_scan(const Density& d, double eta, int grid) {
  if (grid < 2) throw InvalidParameter("sliding scan needs at least 2 grid points");
  Interval range = sliding_family_range(d, eta);
  std::vector<ScanEntry> out(static_cast<std::size_t>(grid));
  double step = range.length() / (grid - 1);
  for (int i = 0; i < grid; ++i) {
    double a = i + 1 == grid ? range.hi : range.lo + i * step;
    double b = right_end_for_mass(d, a, eta);
    out[i].stats = conditional_summary(d, Interval(a, b));
    out[i].vanishing_left_density = d.pdf(a) < 1e-14;
  }
  return out;
}

}  // namespace silence
