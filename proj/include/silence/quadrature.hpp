#ifndef SILENCE_QUADRATURE_HPP
#define SILENCE_QUADRATURE_HPP

#include <functional>
#include <span>

namespace silence {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Integrates f over the finite interval [a, b], splitting at every
/// breakpoint that falls strictly inside. Pieces are integrated with a
/// double-exponential rule, which tolerates the square-root endpoint
/// behaviour of densities that vanish or kink at a breakpoint.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, std::span<const double> breakpoints = {},
                           const QuadratureOptions& options = {});

}  // namespace silence

#endif  // SILENCE_QUADRATURE_HPP
