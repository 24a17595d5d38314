// Prints (1 - alpha_eff) for a few vintage Linpack speedups and for a
// ranked machine, showing the two closed forms side by side.

#include <cstdio>

#include "alphaeff/amdahl.hpp"

int main() {
  using namespace alphaeff;

  struct Run {
    const char* machine;
    int k;
    double speedup;
  };
  const Run runs[] = {
      {"Cray Y-MP/8", 2, 1.95007800312},
      {"Cray Y-MP/8", 8, 6.96197023758},
      {"IBM-3090", 2, 1.99004975124},
      {"Alliant FX/80", 8, 5.99116303452},
  };
  std::printf("%-14s %3s %10s %12s\n", "machine", "k", "speedup", "1-alpha_eff");
  for (const auto& r : runs) {
    const auto e = alpha_eff_from_speedup(ProcessorCount{r.k}, Speedup{r.speedup});
    std::printf("%-14s %3d %10.5f %12.4e\n", r.machine, r.k, r.speedup, e.one_minus_alpha);
  }

  // Rmax/Rpeak and core count of a ranked machine.
  const auto sunway =
      alpha_from_efficiency(ProcessorCount{10'649'600}, Efficiency{93014.6 / 125435.9});
  std::printf("\nSunway TaihuLight: 1-alpha = %.4e\n", sunway.one_minus_alpha);
}
