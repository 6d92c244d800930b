#pragma once

// Test-only reference implementations, kept independent of the library's
// propagation engine and polynomial assembly routes: the closure below is
// a naive whole-graph rescan fixpoint, and the expected-value oracle
// enumerates every individual PMU copy.

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "fpd/graph.hpp"
#include "fpd/placement.hpp"
#include "fpd/poly.hpp"

namespace fpd_test {

inline std::set<int> naive_observed(const fpd::Graph& g,
                                    const std::vector<int>& support,
                                    std::mt19937* order_rng = nullptr) {
  std::set<int> obs;
  for (int v : support) {
    obs.insert(v);
    for (int u : g.neighbors(v)) obs.insert(u);
  }
  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    if (order_rng) std::shuffle(order.begin(), order.end(), *order_rng);
    for (int v : order) {
      if (!obs.count(v)) continue;
      int unobserved = -1, count = 0;
      for (int u : g.neighbors(v))
        if (!obs.count(u)) {
          unobserved = u;
          ++count;
        }
      if (count == 1) {
        obs.insert(unobserved);
        changed = true;
      }
    }
  }
  return obs;
}

inline bool naive_is_pds(const fpd::Graph& g, const std::vector<int>& support) {
  return static_cast<int>(naive_observed(g, support).size()) == g.vertex_count();
}

// Literal fragile process: every PMU copy fails independently, so sum
// |Obs(live set)| * q^{#dead} (1-q)^{#alive} over all outcomes.
inline fpd::Poly brute_force_expected_poly(const fpd::Graph& g,
                                           const fpd::Placement& p) {
  std::vector<int> copies;
  for (const auto& [v, m] : p.entries())
    for (int i = 0; i < m; ++i) copies.push_back(v);
  const int c = static_cast<int>(copies.size());
  fpd::Poly total;
  for (std::uint64_t mask = 0; mask < (1ull << c); ++mask) {
    std::set<int> live_set;
    for (int i = 0; i < c; ++i)
      if (mask & (1ull << i)) live_set.insert(copies[i]);
    std::vector<int> live(live_set.begin(), live_set.end());
    const int alive = std::popcount(mask);
    const int observed = static_cast<int>(naive_observed(g, live).size());
    if (observed > 0)
      total += fpd::poly_from_bernstein({{fpd::BigInt(observed), c - alive, alive}});
  }
  return total;
}

inline fpd::Poly brute_force_prob_full_poly(const fpd::Graph& g,
                                            const fpd::Placement& p) {
  std::vector<int> copies;
  for (const auto& [v, m] : p.entries())
    for (int i = 0; i < m; ++i) copies.push_back(v);
  const int c = static_cast<int>(copies.size());
  fpd::Poly total;
  for (std::uint64_t mask = 0; mask < (1ull << c); ++mask) {
    std::set<int> live_set;
    for (int i = 0; i < c; ++i)
      if (mask & (1ull << i)) live_set.insert(copies[i]);
    std::vector<int> live(live_set.begin(), live_set.end());
    if (static_cast<int>(naive_observed(g, live).size()) == g.vertex_count()) {
      const int alive = std::popcount(mask);
      total += fpd::poly_from_bernstein({{fpd::BigInt(1), c - alive, alive}});
    }
  }
  return total;
}

inline int brute_force_failed_pd_number(const fpd::Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    std::vector<int> support;
    for (int v = 0; v < n; ++v)
      if (mask & (1ull << v)) support.push_back(v);
    if (!naive_is_pds(g, support))
      best = std::max(best, static_cast<int>(support.size()));
  }
  return best;
}

inline int brute_force_pd_number(const fpd::Graph& g) {
  const int n = g.vertex_count();
  int best = n;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    std::vector<int> support;
    for (int v = 0; v < n; ++v)
      if (mask & (1ull << v)) support.push_back(v);
    if (naive_is_pds(g, support))
      best = std::min(best, static_cast<int>(support.size()));
  }
  return best;
}

inline std::vector<long> brute_force_pd_counts(const fpd::Graph& g) {
  const int n = g.vertex_count();
  std::vector<long> counts(n + 1, 0);
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    std::vector<int> support;
    for (int v = 0; v < n; ++v)
      if (mask & (1ull << v)) support.push_back(v);
    if (naive_is_pds(g, support)) ++counts[support.size()];
  }
  return counts;
}

// Independent graph6 encoder assembled from an explicit bit string.
inline std::string reference_graph6_encode(const fpd::Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 0x3f)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 0x3f)));
    out.push_back(static_cast<char>(63 + (n & 0x3f)));
  }
  std::string bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? '1' : '0');
  while (bits.size() % 6 != 0) bits.push_back('0');
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value = value * 2 + (bits[i + b] - '0');
    out.push_back(static_cast<char>(63 + value));
  }
  return out;
}

inline fpd::Graph random_connected_graph(std::mt19937& rng, int n,
                                         double extra_edge_prob = 0.3) {
  fpd::Graph g(n);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    g.add_edge(v, pick(rng));
  }
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < extra_edge_prob) g.add_edge(u, v);
  return g;
}

inline std::vector<int> random_subset(std::mt19937& rng, int n, int size) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace fpd_test
