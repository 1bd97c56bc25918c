#include <cmath>
#include <numbers>
#include <set>

#include <boost/math/special_functions/erf.hpp>

#include "silence/density.hpp"

namespace silence {

namespace {

using std::numbers::pi;

class Uniform final : public DensityModel {
 public:
  Uniform(double lo, double hi) : lo_(lo), hi_(hi) {}
  std::string kind() const override { return "uniform"; }
  Interval support() const override { return {lo_, hi_}; }
  double pdf(double x) const override {
    return (x < lo_ || x > hi_) ? 0.0 : 1.0 / (hi_ - lo_);
  }
  double cdf(double x) const override { return (x - lo_) / (hi_ - lo_); }
  double mode() const override { return 0.5 * (lo_ + hi_); }
  std::optional<double> quantile(double p) const override {
    return lo_ + p * (hi_ - lo_);
  }
  std::optional<double> mean() const override { return 0.5 * (lo_ + hi_); }
  std::optional<double> variance() const override {
    return (hi_ - lo_) * (hi_ - lo_) / 12.0;
  }

 private:
  double lo_, hi_;
};

class Exponential final : public DensityModel {
 public:
  explicit Exponential(double rate) : rate_(rate) {}
  std::string kind() const override { return "exponential"; }
  Interval support() const override { return {0.0, kInf}; }
  double pdf(double x) const override {
    return x < 0.0 ? 0.0 : rate_ * std::exp(-rate_ * x);
  }
  double log_pdf(double x) const override {
    return x < 0.0 ? -kInf : std::log(rate_) - rate_ * x;
  }
  double cdf(double x) const override { return -std::expm1(-rate_ * x); }
  double mode() const override { return 0.0; }
  std::optional<double> quantile(double p) const override {
    return -std::log1p(-p) / rate_;
  }
  std::optional<double> mean() const override { return 1.0 / rate_; }
  std::optional<double> variance() const override { return 1.0 / (rate_ * rate_); }

 private:
  double rate_;
};

class Gaussian final : public DensityModel {
 public:
  Gaussian(double mu, double sigma) : mu_(mu), sigma_(sigma) {}
  std::string kind() const override { return "gaussian"; }
  Interval support() const override { return {-kInf, kInf}; }
  double pdf(double x) const override { return std::exp(log_pdf(x)); }
  double log_pdf(double x) const override {
    double z = (x - mu_) / sigma_;
    return -0.5 * z * z - std::log(sigma_ * std::sqrt(2.0 * pi));
  }
  double cdf(double x) const override {
    return 0.5 * std::erfc(-(x - mu_) / (sigma_ * std::numbers::sqrt2));
  }
  double mode() const override { return mu_; }
  std::optional<double> quantile(double p) const override {
    return mu_ - sigma_ * std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
  }
  std::optional<double> mean() const override { return mu_; }
  std::optional<double> variance() const override { return sigma_ * sigma_; }

 private:
  double mu_, sigma_;
};

class Laplace final : public DensityModel {
 public:
  Laplace(double mu, double b) : mu_(mu), b_(b) {}
  std::string kind() const override { return "laplace"; }
  Interval support() const override { return {-kInf, kInf}; }
  double pdf(double x) const override {
    return std::exp(-std::abs(x - mu_) / b_) / (2.0 * b_);
  }
  double log_pdf(double x) const override {
    return -std::abs(x - mu_) / b_ - std::log(2.0 * b_);
  }
  double cdf(double x) const override {
    double z = (x - mu_) / b_;
    return z < 0.0 ? 0.5 * std::exp(z) : 1.0 - 0.5 * std::exp(-z);
  }
  double mode() const override { return mu_; }
  std::optional<double> quantile(double p) const override {
    return p < 0.5 ? mu_ + b_ * std::log(2.0 * p) : mu_ - b_ * std::log(2.0 * (1.0 - p));
  }
  std::optional<double> mean() const override { return mu_; }
  std::optional<double> variance() const override { return 2.0 * b_ * b_; }
  std::vector<double> breakpoints() const override { return {mu_}; }

 private:
  double mu_, b_;
};

// pdf = c e^{left x} for x <= 0 and c e^{-right x} for x >= 0.
class UnbalancedLaplace final : public DensityModel {
 public:
  UnbalancedLaplace(double left, double right)
      : left_(left), right_(right), c_(left * right / (left + right)) {}
  std::string kind() const override { return "unbalanced-laplace"; }
  Interval support() const override { return {-kInf, kInf}; }
  double pdf(double x) const override { return std::exp(log_pdf(x)); }
  double log_pdf(double x) const override {
    return std::log(c_) + (x <= 0.0 ? left_ * x : -right_ * x);
  }
  double cdf(double x) const override {
    double left_mass = c_ / left_;
    if (x <= 0.0) return left_mass * std::exp(left_ * x);
    return left_mass - (c_ / right_) * std::expm1(-right_ * x);
  }
  double mode() const override { return 0.0; }
  std::optional<double> quantile(double p) const override {
    double left_mass = c_ / left_;
    if (p <= left_mass) return std::log(p / left_mass) / left_;
    return -std::log1p(-(p - left_mass) * right_ / c_) / right_;
  }
  std::optional<double> mean() const override {
    return c_ * (1.0 / (right_ * right_) - 1.0 / (left_ * left_));
  }
  std::optional<double> variance() const override {
    double second = 2.0 * c_ * (1.0 / std::pow(left_, 3) + 1.0 / std::pow(right_, 3));
    double m = *mean();
    return second - m * m;
  }
  std::vector<double> breakpoints() const override { return {0.0}; }

 private:
  double left_, right_, c_;
};

class Rayleigh final : public DensityModel {
 public:
  explicit Rayleigh(double sigma) : sigma_(sigma) {}
  std::string kind() const override { return "rayleigh"; }
  Interval support() const override { return {0.0, kInf}; }
  double pdf(double x) const override {
    if (x < 0.0) return 0.0;
    double s2 = sigma_ * sigma_;
    return x / s2 * std::exp(-x * x / (2.0 * s2));
  }
  double log_pdf(double x) const override {
    if (x <= 0.0) return -kInf;
    double s2 = sigma_ * sigma_;
    return std::log(x / s2) - x * x / (2.0 * s2);
  }
  double cdf(double x) const override {
    return -std::expm1(-x * x / (2.0 * sigma_ * sigma_));
  }
  double mode() const override { return sigma_; }
  std::optional<double> quantile(double p) const override {
    return sigma_ * std::sqrt(-2.0 * std::log1p(-p));
  }
  std::optional<double> mean() const override { return sigma_ * std::sqrt(pi / 2.0); }
  std::optional<double> variance() const override {
    return (4.0 - pi) / 2.0 * sigma_ * sigma_;
  }

 private:
  double sigma_;
};

// Mean and variance are left to quadrature.
class Triangular final : public DensityModel {
 public:
  Triangular(double lo, double mode, double hi) : lo_(lo), mode_(mode), hi_(hi) {}
  std::string kind() const override { return "triangular"; }
  Interval support() const override { return {lo_, hi_}; }
  double pdf(double x) const override {
    if (x < lo_ || x > hi_) return 0.0;
    double h = 2.0 / (hi_ - lo_);
    if (x < mode_) return h * (x - lo_) / (mode_ - lo_);
    if (x > mode_) return h * (hi_ - x) / (hi_ - mode_);
    return h;
  }
  double cdf(double x) const override {
    double w = hi_ - lo_;
    if (x <= mode_) return (x - lo_) * (x - lo_) / (w * (mode_ - lo_));
    return 1.0 - (hi_ - x) * (hi_ - x) / (w * (hi_ - mode_));
  }
  double mode() const override { return mode_; }
  std::optional<double> quantile(double p) const override {
    double w = hi_ - lo_;
    double split = (mode_ - lo_) / w;
    if (p <= split) return lo_ + std::sqrt(p * w * (mode_ - lo_));
    return hi_ - std::sqrt((1.0 - p) * w * (hi_ - mode_));
  }
  std::vector<double> breakpoints() const override { return {mode_}; }

 private:
  double lo_, mode_, hi_;
};

// Two circular arcs joined at x = 0: sqrt(L^2 - x^2) on [-L, 0] and
// (L - R) + sqrt(R^2 - x^2) on [0, R], divided by their total area. The pdf
// drops to zero at x = R. Mean and variance are left to quadrature.
class CircularArc final : public DensityModel {
 public:
  CircularArc(double left, double right) : left_(left), right_(right) {
    area_ = left_half_area() + (left_ - right_) * right_ + pi * right_ * right_ / 4.0;
  }
  std::string kind() const override { return "circular-arc"; }
  Interval support() const override { return {-left_, right_}; }
  double pdf(double x) const override {
    if (x < -left_ || x > right_) return 0.0;
    if (x <= 0.0) return std::sqrt(std::max(0.0, left_ * left_ - x * x)) / area_;
    return (left_ - right_ + std::sqrt(std::max(0.0, right_ * right_ - x * x))) / area_;
  }
  double cdf(double x) const override {
    if (x <= 0.0) return (left_half_area() + arc_area(x, left_)) / area_;
    return (left_half_area() + (left_ - right_) * x + arc_area(x, right_)) / area_;
  }
  double mode() const override { return 0.0; }
  std::vector<double> breakpoints() const override { return {0.0}; }

 private:
  double left_half_area() const { return pi * left_ * left_ / 4.0; }
  // Integral of sqrt(r^2 - t^2) over [0, x].
  static double arc_area(double x, double r) {
    double u = std::clamp(x / r, -1.0, 1.0);
    return 0.5 * (x * std::sqrt(std::max(0.0, r * r - x * x)) + r * r * std::asin(u));
  }

  double left_, right_, area_ = 1.0;
};

double take(const DensityParams& params, std::string_view name, double fallback,
            std::set<std::string, std::less<>>& used) {
  used.insert(std::string(name));
  auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

void require(bool ok, std::string_view message) {
  if (!ok) throw InvalidParameter(std::string(message));
}

}  // namespace

const std::vector<std::string>& catalog_kinds() {
  static const std::vector<std::string> kinds{
      "uniform",  "exponential", "gaussian",   "laplace",
      "unbalanced-laplace", "rayleigh", "triangular", "circular-arc"};
  return kinds;
}

Density make_density(std::string_view kind, const DensityParams& params) {
  std::set<std::string, std::less<>> used;
  for (const auto& [name, value] : params) {
    require(std::isfinite(value), "parameter '" + name + "' must be finite");
  }
  std::shared_ptr<const DensityModel> model;
  if (kind == "uniform") {
    double lo = take(params, "lo", 0.0, used);
    double hi = take(params, "hi", 1.0, used);
    require(lo < hi, "uniform requires lo < hi");
    model = std::make_shared<Uniform>(lo, hi);
  } else if (kind == "exponential") {
    double rate = take(params, "lambda", 1.0, used);
    require(rate > 0.0, "exponential requires lambda > 0");
    model = std::make_shared<Exponential>(rate);
  } else if (kind == "gaussian") {
    double mu = take(params, "mu", 0.0, used);
    double sigma = take(params, "sigma", 1.0, used);
    require(sigma > 0.0, "gaussian requires sigma > 0");
    model = std::make_shared<Gaussian>(mu, sigma);
  } else if (kind == "laplace") {
    double mu = take(params, "mu", 0.0, used);
    double b = take(params, "b", 1.0, used);
    require(b > 0.0, "laplace requires b > 0");
    model = std::make_shared<Laplace>(mu, b);
  } else if (kind == "unbalanced-laplace") {
    double left = take(params, "lambda_left", 1.5, used);
    double right = take(params, "lambda_right", 0.3, used);
    require(left > 0.0 && right > 0.0,
            "unbalanced-laplace requires positive lambda_left and lambda_right");
    model = std::make_shared<UnbalancedLaplace>(left, right);
  } else if (kind == "rayleigh") {
    double sigma = take(params, "sigma", 1.0, used);
    require(sigma > 0.0, "rayleigh requires sigma > 0");
    model = std::make_shared<Rayleigh>(sigma);
  } else if (kind == "triangular") {
    double lo = take(params, "lo", -0.25, used);
    double mode = take(params, "mode", 0.0, used);
    double hi = take(params, "hi", 1.0, used);
    require(lo <= mode && mode <= hi && lo < hi,
            "triangular requires lo <= mode <= hi and lo < hi");
    model = std::make_shared<Triangular>(lo, mode, hi);
  } else if (kind == "circular-arc") {
    double left = take(params, "left_radius", 2.0, used);
    double right = take(params, "right_radius", 1.0, used);
    require(right > 0.0 && left >= right,
            "circular-arc requires left_radius >= right_radius > 0");
    model = std::make_shared<CircularArc>(left, right);
  } else {
    throw InvalidParameter("unknown density kind '" + std::string(kind) + "'");
  }
  for (const auto& [name, value] : params) {
    require(used.contains(name), "unknown parameter '" + name + "' for " + std::string(kind));
  }
  return Density(std::move(model));
}

}  // namespace silence
