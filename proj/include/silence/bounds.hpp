#ifndef SILENCE_BOUNDS_HPP
#define SILENCE_BOUNDS_HPP

#include <optional>
#include <span>
#include <vector>

#include "silence/density.hpp"

namespace silence {

enum class CurveSource { GaussBound, ExactUniform, ExactGaussian, Periodic };

const char* to_string(CurveSource source);

/// One point of a sampling-rate / distortion trade-off curve. `k` is the
/// half-width of the silence interval about the mode; periodic points carry
/// NaN there since they are parametrised by rate.
struct RateDistortionPoint {
  double k = 0.0;
  double rate = 0.0;
  double distortion = 0.0;
  CurveSource source = CurveSource::GaussBound;
};

/// sqrt((mean - mode)^2 + variance).
double tau(const Density& d);

/// Gauss-inequality bound on P[|X - mode| > k]:
///   (4/9) tau^2 / k^2        for k >= 2 tau / sqrt(3)
///   1 - k / (sqrt(3) tau)    otherwise,
/// capped at 1.
double gauss_rate_bound(double k, double tau);

/// Rate bound times the uniform-peakedness cap min(sigma^2, k^2 / 3).
double gauss_distortion_bound(double k, double tau, double sigma2);

/// Exact trade-off of the silence interval [mode - k, mode + k]:
/// rate = 1 - mass, distortion = mass * conditional variance.
std::vector<RateDistortionPoint> exact_symmetric_curve(const Density& d,
                                                       std::span<const double> ks,
                                                       CurveSource label);

/// Periodic sampling of an IID process at rate r: distortion (1 - r) sigma^2.
std::vector<RateDistortionPoint> periodic_curve(double sigma2, std::span<const double> rates);

struct Fig6Curves {
  std::vector<RateDistortionPoint> gauss_bound;
  std::vector<RateDistortionPoint> exact_uniform;
  std::vector<RateDistortionPoint> exact_gaussian;
  std::vector<RateDistortionPoint> periodic;
};

/// k grid with `steps` points on [k_min, k_max], plus the Gauss-bound
/// branch point 2/sqrt(3) when it falls inside; sorted, duplicates removed.
std::vector<double> make_k_grid(double k_min, double k_max, int steps);

/// Four curves under the unit normalization sigma = tau = 1: the Gauss
/// bound, the exact uniform(-sqrt3, sqrt3) and gaussian(0, 1) curves over
/// `ks`, and periodic sampling over as many equispaced rates in [0, 1].
Fig6Curves fig6_sweep(std::span<const double> ks);

/// Distortion of `curve` at `rate` by linear interpolation in rate;
/// nullopt when rate lies outside the curve's range.
std::optional<double> distortion_at_rate(std::span<const RateDistortionPoint> curve,
                                         double rate);

/// Largest ratio of the exact Gaussian distortion to the periodic
/// distortion (1 - r) sigma2 over matched rates r in [rate_lo, rate_hi].
double max_distortion_ratio(std::span<const RateDistortionPoint> exact_gaussian,
                            double sigma2 = 1.0, double rate_lo = 0.3,
                            double rate_hi = 0.9);

}  // namespace silence

#endif  // SILENCE_BOUNDS_HPP
