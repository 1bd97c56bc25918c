// Regenerates tests/golden/super_level_slack.json: relative excess of the
// super-level conditional variance over the brute-force optimum, measured
// on a fine scan grid.

#include <cstdio>

#include "silence/heuristics.hpp"

using namespace silence;

int main() {
  constexpr int kGrid = 2000;
  const char* kinds[] = {"unbalanced-laplace", "circular-arc", "triangular"};
  std::printf("{\n  \"grid\": %d,\n  \"slack\": {\n", kGrid);
  for (int i = 0; i < 3; ++i) {
    Density d = make_density(kinds[i]);
    std::printf("    \"%s\": {", kinds[i]);
    const char* sep = "";
    for (double eta : {0.2, 0.4, 0.6, 0.8}) {
      double sl = conditional_summary(d, super_level_interval(d, eta)).cond_variance;
      double opt =
          brute_force_optimal(d, eta, DistortionKind::SquaredError, kGrid).design.cond_distortion;
      std::printf("%s\"%.1f\": %.9e", sep, eta, sl / opt - 1.0);
      sep = ", ";
    }
    std::printf("}%s\n", i < 2 ? "," : "");
  }
  std::printf("  }\n}\n");
}
