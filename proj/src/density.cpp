#include "silence/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "silence/solvers.hpp"

namespace silence {

double DensityModel::log_pdf(double x) const {
  double p = pdf(x);
  return p > 0.0 ? std::log(p) : -kInf;
}

namespace {

constexpr double kNormalizationTolerance = 1e-6;

// Walks outward from `from` in doubling steps until the pdf drops below
// `threshold`, then bisects for the crossing.
double tail_cutoff(const DensityModel& m, double from, double direction,
                   double threshold) {
  double step = 1.0;
  double inner = from;
  double outer = from + direction * step;
  int guard = 0;
  while (m.pdf(outer) >= threshold) {
    inner = outer;
    step *= 2.0;
    outer = from + direction * step;
    if (++guard > 1100) {
      throw InvalidParameter("density tail does not decay");
    }
  }
  auto below = [&](double x) { return m.pdf(x) < threshold; };
  if (direction > 0) {
    return predicate_boundary(below, inner, outer);
  }
  auto below_mirrored = [&](double t) { return below(-t); };
  return -predicate_boundary(below_mirrored, -inner, -outer);
}

}  // namespace

Density::Density(std::shared_ptr<const DensityModel> model)
    : model_(std::move(model)) {
  if (!model_) throw InvalidParameter("null density model");
  support_ = model_->support();
  mode_ = model_->mode();
  peak_ = model_->pdf(mode_);
  if (!(peak_ > 0.0) || !std::isfinite(peak_)) {
    throw InvalidParameter("density must be positive and finite at its mode");
  }
  double threshold = kTailCutoff * peak_;
  double lo = std::isfinite(support_.lo)
                  ? support_.lo
                  : tail_cutoff(*model_, mode_, -1.0, threshold);
  double hi = std::isfinite(support_.hi)
                  ? support_.hi
                  : tail_cutoff(*model_, mode_, +1.0, threshold);
  effective_ = Interval(lo, hi);

  for (double x : model_->breakpoints()) {
    if (x > lo && x < hi) breakpoints_.push_back(x);
  }
  if (mode_ > lo && mode_ < hi) breakpoints_.push_back(mode_);
  std::sort(breakpoints_.begin(), breakpoints_.end());
  breakpoints_.erase(std::unique(breakpoints_.begin(), breakpoints_.end()),
                     breakpoints_.end());

  QuadratureOptions tight{1e-13, 1e-13};
  double total = partial_expectation([](double) { return 1.0; }, effective_, tight);
  if (!(std::abs(total - 1.0) <= kNormalizationTolerance)) {
    throw InvalidParameter("density does not integrate to one");
  }
  if (auto m = model_->mean()) {
    mean_ = *m;
  } else {
    mean_ = partial_expectation([](double x) { return x; }, effective_, tight);
  }
  if (auto v = model_->variance()) {
    variance_ = *v;
  } else {
    double c = mean_;
    variance_ = partial_expectation(
        [c](double x) { return (x - c) * (x - c); }, effective_, tight);
  }
}

double Density::pdf(double x) const {
  if (x < support_.lo || x > support_.hi) return 0.0;
  return model_->pdf(x);
}

double Density::log_pdf(double x) const {
  if (x < support_.lo || x > support_.hi) return -kInf;
  return model_->log_pdf(x);
}

double Density::cdf(double x) const {
  if (x <= support_.lo) return 0.0;
  if (x >= support_.hi) return 1.0;
  return std::clamp(model_->cdf(x), 0.0, 1.0);
}

double Density::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) {
    throw InvalidParameter("quantile requires 0 < p < 1");
  }
  if (auto q = model_->quantile(p)) return *q;
  RootResult r = solve_monotone([this](double x) { return cdf(x); },
                                [this](double x) { return pdf(x); },
                                effective_.lo, effective_.hi, p,
                                kQuantileTolerance);
  return r.x;
}

double Density::mass(const Interval& iv) const {
  if (!(iv.hi > iv.lo)) return 0.0;
  return std::clamp(cdf(iv.hi) - cdf(iv.lo), 0.0, 1.0);
}

double Density::partial_expectation(const std::function<double(double)>& g,
                                    const Interval& iv,
                                    const QuadratureOptions& options) const {
  double a = std::max(iv.lo, effective_.lo);
  double b = std::min(iv.hi, effective_.hi);
  if (!(b > a)) return 0.0;
  auto integrand = [&](double x) {
    double p = model_->pdf(x);
    return p == 0.0 ? 0.0 : g(x) * p;
  };
  return integrate(integrand, a, b, breakpoints_, options).value;
}

LogConcavityReport verify_log_concavity(const Density& d, int grid_points,
                                        double tol) {
  if (grid_points < 3) {
    throw InvalidParameter("log-concavity scan needs at least 3 grid points");
  }
  const Interval& s = d.effective_support();
  double h = s.length() / (grid_points + 1);
  std::vector<double> xs(grid_points);
  std::vector<double> ls(grid_points);
  for (int i = 0; i < grid_points; ++i) {
    xs[i] = s.lo + (i + 1) * h;
    ls[i] = d.log_pdf(xs[i]);
    if (!std::isfinite(ls[i])) {
      throw SupportSamplingFailure("density vanishes inside its support at x = " +
                                   std::to_string(xs[i]));
    }
  }
  LogConcavityReport report;
  for (int i = 1; i + 1 < grid_points; ++i) {
    double second = ls[i - 1] - 2.0 * ls[i] + ls[i + 1];
    double scale =
        std::max(1.0, std::abs(ls[i - 1]) + 2.0 * std::abs(ls[i]) + std::abs(ls[i + 1]));
    if (second > tol * scale) {
      report.log_concave = false;
      report.violating_triple = std::array<double, 3>{xs[i - 1], xs[i], xs[i + 1]};
      break;
    }
  }
  return report;
}

}  // namespace silence
