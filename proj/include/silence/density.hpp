#ifndef SILENCE_DENSITY_HPP
#define SILENCE_DENSITY_HPP

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "silence/interval.hpp"
#include "silence/quadrature.hpp"

namespace silence {

/// Probability tolerance of quantile inversion: |cdf(quantile(p)) - p|.
inline constexpr double kQuantileTolerance = 1e-12;

/// Unbounded tails are truncated where pdf drops below this fraction of the
/// peak density.
inline constexpr double kTailCutoff = 1e-16;

/// Raised when a density vanishes at an interior point of its declared
/// support.
class SupportSamplingFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A scalar density implementation. Catalog members live in catalog.cpp;
/// tests implement their own (e.g. non-log-concave fixtures).
///
/// Only pdf, cdf, support and mode are mandatory. Optional services return
/// std::nullopt when no closed form exists, in which case Density falls
/// back to numeric inversion or quadrature.
class DensityModel {
 public:
  virtual ~DensityModel() = default;

  virtual std::string kind() const = 0;
  virtual Interval support() const = 0;
  virtual double pdf(double x) const = 0;
  virtual double cdf(double x) const = 0;
  virtual double mode() const = 0;

  virtual double log_pdf(double x) const;
  virtual std::optional<double> quantile(double /*p*/) const {
    return std::nullopt;
  }
  virtual std::optional<double> mean() const { return std::nullopt; }
  virtual std::optional<double> variance() const { return std::nullopt; }
  /// Interior points where the pdf is not smooth.
  virtual std::vector<double> breakpoints() const { return {}; }
};

/// Immutable handle to a density together with its cached summary
/// statistics. Cheap to copy; safe to share between threads.
class Density {
 public:
  /// Validates normalization and caches mean, variance, mode and the
  /// effective (tail-truncated) support.
  explicit Density(std::shared_ptr<const DensityModel> model);

  std::string kind() const { return model_->kind(); }

  double pdf(double x) const;
  double log_pdf(double x) const;
  double cdf(double x) const;
  /// Requires 0 < p < 1; see kQuantileTolerance.
  double quantile(double p) const;
  /// cdf(hi) - cdf(lo), clamped to [0, 1]; zero for degenerate intervals.
  double mass(const Interval& iv) const;

  /// Declared support, possibly unbounded.
  const Interval& support() const { return support_; }
  /// Support with unbounded ends replaced by the kTailCutoff points.
  const Interval& effective_support() const { return effective_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }

  double mean() const { return mean_; }
  double variance() const { return variance_; }
  double mode() const { return mode_; }
  double peak() const { return peak_; }

  /// Integral of g(x) p(x) over iv intersected with the effective support.
  double partial_expectation(const std::function<double(double)>& g,
                             const Interval& iv,
                             const QuadratureOptions& options = {}) const;

  const DensityModel& model() const { return *model_; }

 private:
  std::shared_ptr<const DensityModel> model_;
  Interval support_;
  Interval effective_;
  std::vector<double> breakpoints_;
  double mode_ = 0.0;
  double peak_ = 0.0;
  double mean_ = 0.0;
  double variance_ = 0.0;
};

using DensityParams = std::map<std::string, double, std::less<>>;

/// Catalog identifiers accepted by make_density.
const std::vector<std::string>& catalog_kinds();

/// Builds a catalog density. Missing parameters take the values of the
/// reference shapes (e.g. triangular(-0.25, 0, 1)); unknown parameter names
/// and invalid values throw InvalidParameter.
///
///   uniform             lo, hi
///   exponential         lambda
///   gaussian            mu, sigma
///   laplace             mu, b
///   unbalanced-laplace  lambda_left, lambda_right
///   rayleigh            sigma
///   triangular          lo, mode, hi
///   circular-arc        left_radius, right_radius
Density make_density(std::string_view kind, const DensityParams& params = {});

struct LogConcavityReport {
  bool log_concave = true;
  /// Grid points (x[i-1], x[i], x[i+1]) of the first violation.
  std::optional<std::array<double, 3>> violating_triple;
};

/// Scans second differences of log pdf on `grid_points` equispaced points
/// strictly inside the effective support. A triple violates when its second
/// difference exceeds tol scaled by the local log-pdf magnitude (at least 1).
LogConcavityReport verify_log_concavity(const Density& d, int grid_points,
                                        double tol);

}  // namespace silence

#endif  // SILENCE_DENSITY_HPP
