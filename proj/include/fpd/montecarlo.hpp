#pragma once

#include <cstdint>
#include <string>

#include "fpd/graph.hpp"
#include "fpd/placement.hpp"

namespace fpd {

struct SimEstimate {
  long long trials = 0;
  double mean_observed = 0.0;
  double full_obs_frequency = 0.0;
  double std_error = 0.0;  // standard error of the mean
  std::uint64_t seed = 0;
  std::string generator;  // RNG identifier recorded with every estimate
};

// Seeded simulation of the fragile process: per trial every PMU copy
// survives independently with probability 1-q and the surviving support
// is propagated. Trial t draws from its own substream derived from
// (seed, t), so results are bit-identical regardless of evaluation order.
SimEstimate simulate(const Graph& g, const Placement& p, double q,
                     long long trials, std::uint64_t seed);

}  // namespace fpd
