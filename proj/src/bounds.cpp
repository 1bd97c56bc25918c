#include "silence/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "silence/conditional.hpp"

namespace silence {

namespace {

double branch_point(double tau) { return 2.0 / std::numbers::sqrt3 * tau; }

}  // namespace

const char* to_string(CurveSource source) {
  switch (source) {
    case CurveSource::GaussBound: return "GaussBound";
    case CurveSource::ExactUniform: return "ExactUniform";
    case CurveSource::ExactGaussian: return "ExactGaussian";
    case CurveSource::Periodic: return "Periodic";
  }
  return "unknown";
}

double tau(const Density& d) {
  double offset = d.mean() - d.mode();
  return std::sqrt(offset * offset + d.variance());
}

double gauss_rate_bound(double k, double tau) {
  if (!(k >= 0.0) || !(tau > 0.0)) {
    throw InvalidParameter("gauss bound requires k >= 0 and tau > 0");
  }
  double bound = k >= branch_point(tau) ? (4.0 / 9.0) * (tau * tau) / (k * k)
                                        : 1.0 - k / (std::numbers::sqrt3 * tau);
  return std::min(1.0, bound);
}

double gauss_distortion_bound(double k, double tau, double sigma2) {
  if (!(sigma2 > 0.0)) throw InvalidParameter("gauss bound requires sigma2 > 0");
  return gauss_rate_bound(k, tau) * std::min(sigma2, k * k / 3.0);
}

std::vector<RateDistortionPoint> exact_symmetric_curve(const Density& d,
                                                       std::span<const double> ks,
                                                       CurveSource label) {
  std::vector<RateDistortionPoint> out;
  out.reserve(ks.size());
  double mode = d.mode();
  for (double k : ks) {
    if (!(k >= 0.0)) throw InvalidParameter("half-width k must be non-negative");
    Interval silence(mode - k, mode + k);
    double mass = d.mass(silence);
    double distortion = 0.0;
    if (mass > kMassFloor) distortion = mass * conditional_summary(d, silence).cond_variance;
    out.push_back({k, 1.0 - mass, distortion, label});
  }
  return out;
}

std::vector<RateDistortionPoint> periodic_curve(double sigma2, std::span<const double> rates) {
  std::vector<RateDistortionPoint> out;
  out.reserve(rates.size());
  for (double r : rates) {
    if (!(r >= 0.0 && r <= 1.0)) throw InvalidParameter("sampling rate must lie in [0, 1]");
    out.push_back({std::numeric_limits<double>::quiet_NaN(), r, (1.0 - r) * sigma2,
                   CurveSource::Periodic});
  }
  return out;
}

std::vector<double> make_k_grid(double k_min, double k_max, int steps) {
  if (!(k_min >= 0.0) || !(k_max >= k_min) || steps < 1) {
    throw InvalidParameter("k grid requires 0 <= k_min <= k_max and steps >= 1");
  }
  if (steps == 1 && k_max > k_min) throw InvalidParameter("k grid over a range needs steps >= 2");
  std::vector<double> ks;
  ks.reserve(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i < steps; ++i) {
    ks.push_back(i + 1 == steps ? k_max : k_min + (k_max - k_min) * i / (steps - 1));
  }
  double branch = branch_point(1.0);
  if (branch >= k_min && branch <= k_max) ks.push_back(branch);
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

Fig6Curves fig6_sweep(std::span<const double> ks) {
  Fig6Curves curves;
  for (double k : ks) {
    curves.gauss_bound.push_back(
        {k, gauss_rate_bound(k, 1.0), gauss_distortion_bound(k, 1.0, 1.0), CurveSource::GaussBound});
  }
  Density uniform = make_density("uniform", {{"lo", -std::numbers::sqrt3}, {"hi", std::numbers::sqrt3}});
  Density gaussian = make_density("gaussian", {{"mu", 0.0}, {"sigma", 1.0}});
  curves.exact_uniform = exact_symmetric_curve(uniform, ks, CurveSource::ExactUniform);
  curves.exact_gaussian = exact_symmetric_curve(gaussian, ks, CurveSource::ExactGaussian);

  std::vector<double> rates;
  std::size_t n = ks.size();
  for (std::size_t i = 0; i < n; ++i) {
    rates.push_back(n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1));
  }
  curves.periodic = periodic_curve(1.0, rates);
  return curves;
}

std::optional<double> distortion_at_rate(std::span<const RateDistortionPoint> curve,
                                         double rate) {
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    double r0 = curve[i].rate;
    double r1 = curve[i + 1].rate;
    double lo = std::min(r0, r1);
    double hi = std::max(r0, r1);
    if (rate < lo || rate > hi) continue;
    if (hi == lo) return std::min(curve[i].distortion, curve[i + 1].distortion);
    double t = (rate - r0) / (r1 - r0);
    return curve[i].distortion + t * (curve[i + 1].distortion - curve[i].distortion);
  }
  return std::nullopt;
}

double max_distortion_ratio(std::span<const RateDistortionPoint> exact_gaussian,
                            double sigma2, double rate_lo, double rate_hi) {
  if (!(rate_lo >= 0.0 && rate_hi < 1.0 && rate_lo <= rate_hi)) {
    throw InvalidParameter("rate window must satisfy 0 <= lo <= hi < 1");
  }
  std::vector<double> rates{rate_lo, rate_hi};
  for (const auto& p : exact_gaussian) {
    if (p.rate > rate_lo && p.rate < rate_hi) rates.push_back(p.rate);
  }
  double worst = 0.0;
  for (double r : rates) {
    std::optional<double> dist = distortion_at_rate(exact_gaussian, r);
    if (!dist) throw InvalidParameter("curve does not cover the rate window");
    worst = std::max(worst, *dist / ((1.0 - r) * sigma2));
  }
  return worst;
}

}  // namespace silence
