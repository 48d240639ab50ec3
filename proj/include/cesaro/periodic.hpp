#pragma once

#include "cesaro/local_rule.hpp"

namespace cesaro {

// The sigma-periodic point ...ggg... with x_{phase + i + t|g|} = g_i.  Phase
// only matters when a cylinder position is being tracked; the dynamics are
// shift-equivariant.
struct PeriodicConfig {
  Word generator;
  int phase = 0;
  bool operator==(const PeriodicConfig&) const = default;
};

// One application of the rule around the cycle.  Rejects generators whose
// periodic point is not in an SFT domain (wraparound included).
PeriodicConfig apply_periodic(const LocalRule& rule, const PeriodicConfig& x);

// Exact orbit of a periodic configuration: iterate until the first repeated
// configuration.  preperiod and period are minimal; cycle holds
// F^{preperiod}(x) .. F^{preperiod+period-1}(x).
struct OrbitSummary {
  int preperiod = 0;
  int period = 0;
  std::vector<PeriodicConfig> cycle;
};

// HorizonExceeded when no repeat shows up within max_steps (never happens
// once max_steps >= |A|^|generator|).
OrbitSummary orbit_periodic(const LocalRule& rule, const PeriodicConfig& x,
                            int max_steps);

}  // namespace cesaro
