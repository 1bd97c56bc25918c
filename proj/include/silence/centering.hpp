#ifndef SILENCE_CENTERING_HPP
#define SILENCE_CENTERING_HPP

#include <vector>

#include "silence/conditional.hpp"

namespace silence {

/// A silence interval together with its estimate under silence.
struct SilenceDesign {
  Interval interval;
  double estimate = 0.0;
  double mass = 0.0;
  DistortionKind distortion_kind = DistortionKind::SquaredError;
  /// Conditional variance (squared error) or conditional mean absolute
  /// deviation about the median (absolute error).
  double cond_distortion = 0.0;
  int iterations = 0;
};

struct CenteringTrace {
  std::vector<SilenceDesign> steps;
  bool converged = false;
  /// Largest endpoint movement of the final step.
  double fixed_point_gap = 0.0;

  const SilenceDesign& final() const { return steps.back(); }
};

struct CenteringOptions {
  double tol = 1e-8;
  int max_iter = 20000;
};

/// Conditional mean (squared error) or conditional median (absolute error).
double best_estimate(const Density& d, const Interval& iv, DistortionKind kind);

/// Describes `iv` as a SilenceDesign; throws NullMass on null intervals.
SilenceDesign describe(const Density& d, const Interval& iv, DistortionKind kind,
                       int iterations = 0);

/// One centering pass: the smallest interval symmetric about the current
/// estimate collecting mass eta, clipped to the support.
SilenceDesign centering_step(const Density& d, const Interval& iv, double eta,
                             DistortionKind kind);

/// Repeats centering until both endpoints move less than options.tol.
/// `steps` holds the result of every centering pass (the start itself is not
/// included). Running out of iterations is reported via `converged`.
CenteringTrace iterate_centering(const Density& d, const Interval& start, double eta,
                                 DistortionKind kind, const CenteringOptions& options = {});

struct OptimalDesign {
  SilenceDesign design;
  /// Extent of left ends whose scan distortion is within 1e-10 of the
  /// minimum; zero for a unique optimum.
  double valley_width = 0.0;
};

/// Grid minimum of the sliding family refined by golden-section search
/// between the neighbours of the grid minimum. Independent of centering.
OptimalDesign brute_force_optimal(const Density& d, double eta, DistortionKind kind,
                                  int grid = 200);

/// True when one centering step at eta = mass(iv) moves less than `tol` of
/// probability mass (symmetric difference).
bool is_centered(const Density& d, const Interval& iv, DistortionKind kind, double tol);

}  // namespace silence

#endif  // SILENCE_CENTERING_HPP
