#ifndef SILENCE_SIMULATOR_HPP
#define SILENCE_SIMULATOR_HPP

#include <cstdint>

#include "silence/density.hpp"

namespace silence {

/// Counter-based uniform generator: the draw for tick i depends only on
/// (seed, i), so any partition of the ticks reproduces the same stream.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t counter) const;
  /// Uniform on the open interval (0, 1).
  double uniform(std::uint64_t counter) const;

 private:
  std::uint64_t seed_;
};

struct StandardErrors {
  double rate = 0.0;
  double mse = 0.0;
  double mae = 0.0;
  friend bool operator==(const StandardErrors&, const StandardErrors&) = default;
};

struct SimReport {
  std::uint64_t n_ticks = 0;
  std::uint64_t seed = 0;
  double empirical_rate = 0.0;
  double empirical_mse = 0.0;
  double empirical_mae = 0.0;
  StandardErrors standard_errors;

  friend bool operator==(const SimReport&, const SimReport&) = default;
};

/// Draws n_ticks IID samples by inverse-cdf sampling. A tick whose value
/// falls outside `silence` is transmitted (zero error); otherwise the
/// receiver keeps `estimate`. Ticks are processed in fixed-size blocks
/// spread over `workers` threads; the report does not depend on `workers`.
SimReport simulate(const Density& d, const Interval& silence, double estimate,
                   std::uint64_t n_ticks, std::uint64_t seed, unsigned workers = 1);

}  // namespace silence

#endif  // SILENCE_SIMULATOR_HPP
