#ifndef SILENCE_CONDITIONAL_HPP
#define SILENCE_CONDITIONAL_HPP

#include <vector>

#include "silence/density.hpp"

namespace silence {

/// Intervals with mass at or below this are treated as null sets.
inline constexpr double kMassFloor = 1e-12;

/// Probability mass clipped off an unbounded end before a sliding scan.
inline constexpr double kScanEpsilon = 1e-6;

/// Statistics of X conditioned on X in `interval`.
struct ConditionalSummary {
  Interval interval;
  double mass = 0.0;
  double cond_mean = 0.0;
  double cond_median = 0.0;
  double cond_variance = 0.0;
  double cond_mad = 0.0;  // mean absolute deviation about cond_median
  double midpoint = 0.0;
};

/// Throws NullMass when mass(d, iv) <= kMassFloor.
ConditionalSummary conditional_summary(const Density& d, const Interval& iv);

/// Right end b of the interval [a, b] carrying probability `eta`.
/// Throws Infeasible when less than eta lies to the right of a.
double right_end_for_mass(const Density& d, double a, double eta);

struct ScanEntry {
  ConditionalSummary stats;
  /// pdf(a) < 1e-14: the left end sits where the density vanishes.
  bool vanishing_left_density = false;
};

/// Sliding family of mass-eta intervals, left ends equispaced over
/// [support.lo, quantile(1 - eta)] (an unbounded lower support is replaced by
/// quantile(kScanEpsilon)).
std::vector<ScanEntry> sliding_family_scan(const Density& d, double eta, int grid);

/// Left-end range swept by sliding_family_scan.
Interval sliding_family_range(const Density& d, double eta);

}  // namespace silence

#endif  // SILENCE_CONDITIONAL_HPP
