#include "silence/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

namespace silence {

namespace {

constexpr std::uint64_t kBlockTicks = 4096;

struct BlockSums {
  double sampled = 0.0;
  double sq = 0.0;
  double sq2 = 0.0;
  double abs = 0.0;
  double abs2 = 0.0;
};

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double standard_error(double sum, double sum_sq, double n) {
  if (n < 2.0) return 0.0;
  double mean = sum / n;
  double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
  return std::sqrt(var / n);
}

}  // namespace

std::uint64_t CounterRng::bits(std::uint64_t counter) const {
  return splitmix64(splitmix64(seed_) ^ splitmix64(counter + 0x632BE59BD9B4E019ULL));
}

double CounterRng::uniform(std::uint64_t counter) const {
  return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
}

SimReport simulate(const Density& d, const Interval& silence, double estimate,
                   std::uint64_t n_ticks, std::uint64_t seed, unsigned workers) {
  if (n_ticks < 1) throw InvalidParameter("simulation needs at least one tick");
  const CounterRng rng(seed);
  const std::uint64_t n_blocks = (n_ticks + kBlockTicks - 1) / kBlockTicks;
  std::vector<BlockSums> blocks(n_blocks);

  auto run_block = [&](std::uint64_t b) {
    BlockSums s;
    std::uint64_t end = std::min(n_ticks, (b + 1) * kBlockTicks);
    for (std::uint64_t t = b * kBlockTicks; t < end; ++t) {
      double x = d.quantile(rng.uniform(t));
      if (!silence.contains(x)) {
        s.sampled += 1.0;
        continue;
      }
      double err = x - estimate;
      s.sq += err * err;
      s.sq2 += err * err * err * err;
      s.abs += std::abs(err);
      s.abs2 += err * err;
    }
    blocks[b] = s;
  };

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n_blocks)));
  if (workers == 1) {
    for (std::uint64_t b = 0; b < n_blocks; ++b) run_block(b);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t b = w; b < n_blocks; b += workers) run_block(b);
      });
    }
    for (auto& th : pool) th.join();
  }

  BlockSums total;
  for (const BlockSums& s : blocks) {
    total.sampled += s.sampled;
    total.sq += s.sq;
    total.sq2 += s.sq2;
    total.abs += s.abs;
    total.abs2 += s.abs2;
  }
  const double n = static_cast<double>(n_ticks);
  SimReport r;
  r.n_ticks = n_ticks;
  r.seed = seed;
  r.empirical_rate = total.sampled / n;
  r.empirical_mse = total.sq / n;
  r.empirical_mae = total.abs / n;
  // The sampled indicator is 0/1, so its sum of squares equals its sum.
  r.standard_errors.rate = standard_error(total.sampled, total.sampled, n);
  r.standard_errors.mse = standard_error(total.sq, total.sq2, n);
  r.standard_errors.mae = standard_error(total.abs, total.abs2, n);
  return r;
}

}  // namespace silence
