#include "cesaro/periodic.hpp"

#include <map>

#include "cesaro/errors.hpp"

namespace cesaro {

PeriodicConfig apply_periodic(const LocalRule& rule, const PeriodicConfig& x) {
  const int n = (int)x.generator.size();
  if (n == 0) fail(ErrorKind::BadParam, "empty generator");
  if (!admits_periodic(rule.domain(), x.generator))
    fail(ErrorKind::Inadmissible, "periodic point (wraparound included) not in domain");
  const int r = rule.radius();
  Word next(n);
  Word window(rule.window_size());
  for (int i = 0; i < n; ++i) {
    for (int j = -r; j <= r; ++j)
      window[j + r] = x.generator[(std::size_t)(((i + j) % n + n) % n)];
    next[i] = rule.local(window);
  }
  return {std::move(next), x.phase};
}

OrbitSummary orbit_periodic(const LocalRule& rule, const PeriodicConfig& x,
                            int max_steps) {
  if (max_steps < 1) fail(ErrorKind::BadParam, "max_steps must be >= 1");
  // Generator words are compared at fixed phase, so a repeat is equality of
  // configurations as points, not merely up to rotation.
  std::map<Word, int> seen;
  std::vector<PeriodicConfig> trajectory;
  PeriodicConfig cur = x;
  for (int step = 0; step <= max_steps; ++step) {
    auto [it, fresh] = seen.emplace(cur.generator, step);
    if (!fresh) {
      OrbitSummary out;
      out.preperiod = it->second;
      out.period = step - it->second;
      out.cycle.assign(trajectory.begin() + out.preperiod, trajectory.end());
      return out;
    }
    trajectory.push_back(cur);
    cur = apply_periodic(rule, cur);
  }
  fail(ErrorKind::HorizonExceeded,
       "no orbit repeat within " + std::to_string(max_steps) + " steps");
}

}  // namespace cesaro
