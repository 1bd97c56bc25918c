#ifndef SILENCE_INTERVAL_HPP
#define SILENCE_INTERVAL_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace silence {

/// Thrown when an argument violates an operation's precondition.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a conditional statistic is requested on an interval that
/// carries (numerically) no probability mass.
class NullMass : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a requested probability mass cannot be collected.
class Infeasible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Closed interval [lo, hi]. Support descriptors may carry infinite ends;
/// silence intervals are finite after clipping to a finite support.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  constexpr Interval() = default;
  Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
      throw InvalidParameter("interval requires lo <= hi");
    }
  }

  double length() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool is_finite() const { return std::isfinite(lo) && std::isfinite(hi); }

  /// Intersection with `other`; returns a degenerate interval at the nearer
  /// boundary when the two do not overlap.
  Interval clipped_to(const Interval& other) const {
    double a = std::clamp(lo, other.lo, other.hi);
    double b = std::clamp(hi, other.lo, other.hi);
    return {a, b};
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

enum class DistortionKind { SquaredError, AbsoluteError };

inline const char* to_string(DistortionKind k) {
  return k == DistortionKind::SquaredError ? "mse" : "mae";
}

}  // namespace silence

#endif  // SILENCE_INTERVAL_HPP
