#ifndef SILENCE_SOLVERS_HPP
#define SILENCE_SOLVERS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>

namespace silence {

struct RootResult {
  double x = 0.0;
  double residual = 0.0;  // f(x) - target
  int iterations = 0;
  bool converged = false;
};

/// Solves f(x) = target for a nondecreasing f on the bracket [lo, hi],
/// where f(lo) <= target <= f(hi) is assumed (ends are clamped otherwise).
///
/// Newton steps use `df` when it is positive and the step stays strictly
/// inside the current bracket; anything else falls back to bisection, so the
/// iteration is globally convergent. Stops once |f(x) - target| <= ftol or
/// the bracket collapses to a few ulps.
template <class F, class DF>
RootResult solve_monotone(F&& f, DF&& df, double lo, double hi, double target,
                          double ftol, int max_iter = 400) {
  RootResult r;
  double flo = f(lo) - target;
  double fhi = f(hi) - target;
  if (flo >= 0.0) {
    r.x = lo;
    r.residual = flo;
    r.converged = std::abs(flo) <= ftol;
    return r;
  }
  if (fhi <= 0.0) {
    r.x = hi;
    r.residual = fhi;
    r.converged = std::abs(fhi) <= ftol;
    return r;
  }
  double x = 0.5 * (lo + hi);
  for (int it = 1; it <= max_iter; ++it) {
    double fx = f(x) - target;
    r.x = x;
    r.residual = fx;
    r.iterations = it;
    if (std::abs(fx) <= ftol) {
      r.converged = true;
      return r;
    }
    if (fx < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    double width_floor = 4.0 * std::numeric_limits<double>::epsilon() *
                         std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
    if (hi - lo <= width_floor) {
      r.converged = true;
      return r;
    }
    double slope = df(x);
    double next = 0.5 * (lo + hi);
    if (slope > 0.0 && std::isfinite(slope)) {
      double newton = x - fx / slope;
      if (newton > lo && newton < hi) next = newton;
    }
    x = next;
  }
  return r;
}

/// Bisection-only variant of solve_monotone.
template <class F>
RootResult bisect_monotone(F&& f, double lo, double hi, double target,
                           double ftol, int max_iter = 400) {
  return solve_monotone(std::forward<F>(f), [](double) { return 0.0; }, lo, hi,
                        target, ftol, max_iter);
}

/// Boundary of a monotone predicate: returns x in [lo, hi] such that
/// pred is false just below and true at x (pred(hi) assumed true, pred
/// nondecreasing from false to true). Bisection to a few ulps.
template <class P>
double predicate_boundary(P&& pred, double lo, double hi, int max_iter = 200) {
  if (pred(lo)) return lo;
  for (int it = 0; it < max_iter; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

struct MinimumResult {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

/// Golden-section search for the minimum of a unimodal f on [lo, hi].
/// The returned point is the best of the final interior estimate and the
/// two bracket ends, so a minimum sitting on a bracket end is reported
/// exactly.
template <class F>
MinimumResult golden_section_minimize(F&& f, double lo, double hi, double xtol,
                                      int max_iter = 300) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  MinimumResult best;
  best.x = lo;
  best.value = f(lo);
  best.evaluations = 1;
  double f_hi = f(hi);
  ++best.evaluations;
  if (f_hi < best.value) {
    best.x = hi;
    best.value = f_hi;
  }
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  best.evaluations += 2;
  for (int it = 0; it < max_iter && (b - a) > xtol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++best.evaluations;
  }
  double x = fc <= fd ? c : d;
  double fx = fc <= fd ? fc : fd;
  if (fx < best.value) {
    best.x = x;
    best.value = fx;
  }
  return best;
}

}  // namespace silence

#endif  // SILENCE_SOLVERS_HPP
