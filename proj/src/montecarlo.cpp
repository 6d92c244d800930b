#include "fpd/montecarlo.hpp"

#include <cmath>
#include <random>

#include "fpd/errors.hpp"
#include "fpd/propagation.hpp"

namespace fpd {

namespace {

constexpr char kGeneratorId[] = "splitmix64+mt19937_64 v1";

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Substream seed for trial t: one splitmix64 step from (seed, t). Keeps
// trials independent of evaluation order.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial) {
  return mix64(seed + (trial + 1) * 0x9e3779b97f4a7c15ull);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SimEstimate simulate(const Graph& g, const Placement& p, double q,
                     long long trials, std::uint64_t seed) {
  if (!(q >= 0.0 && q <= 1.0)) throw ParameterError("q must lie in [0,1]");
  if (trials < 1) throw ParameterError("trials must be >= 1");
  if (p.empty()) throw ParameterError("placement must be nonempty");
  p.check_against(g);

  ObservationEngine engine(g);
  const int n = g.vertex_count();
  std::vector<int> live;
  double sum = 0.0, sum_sq = 0.0;
  long long full = 0;

  for (long long t = 0; t < trials; ++t) {
    std::mt19937_64 rng(substream_seed(seed, static_cast<std::uint64_t>(t)));
    live.clear();
    for (const auto& [v, m] : p.entries()) {
      bool alive = false;
      for (int copy = 0; copy < m; ++copy)
        if (uniform01(rng) >= q) alive = true;
      if (alive) live.push_back(v);
    }
    engine.run(live);
    const double count = engine.observed_count();
    sum += count;
    sum_sq += count * count;
    if (engine.observed_count() == n) ++full;
  }

  SimEstimate est;
  est.trials = trials;
  est.seed = seed;
  est.generator = kGeneratorId;
  est.mean_observed = sum / static_cast<double>(trials);
  est.full_obs_frequency = static_cast<double>(full) / static_cast<double>(trials);
  if (trials > 1) {
    double variance =
        (sum_sq - static_cast<double>(trials) * est.mean_observed * est.mean_observed) /
        static_cast<double>(trials - 1);
    if (variance < 0.0) variance = 0.0;
    est.std_error = std::sqrt(variance / static_cast<double>(trials));
  }
  return est;
}

}  // namespace fpd
