#pragma once

#include <span>
#include <vector>

#include "fpd/graph.hpp"
#include "fpd/numbers.hpp"
#include "fpd/placement.hpp"

namespace fpd {

// Cap on n for operations that enumerate vertex subsets (2^n work).
inline constexpr int kDefaultSubsetCap = 20;

struct ObservationResult {
  std::vector<int> observed;  // sorted
  bool fully_observed = false;
  int rounds = 0;  // number of forcing steps performed
};

// Reusable workspace for repeated propagation runs on one graph. Not
// thread-safe; use one engine per worker.
class ObservationEngine {
 public:
  explicit ObservationEngine(const Graph& g);

  // Runs domination from `support` followed by the forcing closure.
  // Empty support observes nothing.
  void run(std::span<const int> support);

  int observed_count() const { return count_; }
  bool fully_observed() const { return count_ == n_; }
  int rounds() const { return rounds_; }
  bool is_observed(int v) const { return observed_[v] != 0; }
  std::vector<int> observed_vertices() const;

 private:
  const Graph* g_;
  int n_;
  int count_ = 0;
  int rounds_ = 0;
  std::vector<char> observed_;
  std::vector<int> unobserved_deg_;
  std::vector<int> queue_;
  std::vector<int> forcers_;

  void observe(int v);
};

ObservationResult observed_set(const Graph& g, std::span<const int> support);
ObservationResult observed_set(const Graph& g, const Placement& p);

bool is_power_dominating(const Graph& g, std::span<const int> support);
bool is_power_dominating(const Graph& g, const Placement& p);

// Smallest k such that some k-subset of V(G) power dominates; searches
// sizes ascending. Requires n <= cap.
int power_domination_number(const Graph& g, int cap = kDefaultSubsetCap);

// Largest |F| with Obs(G;F) != V(G), over all subsets including the empty
// set; 0 when every nonempty subset power dominates. Requires n <= cap.
int failed_power_domination_number(const Graph& g, int cap = kDefaultSubsetCap);

// counts[i] = number of i-subsets of V(G) that power dominate, i = 0..n
// (counts[0] is always 0 for nonempty graphs). Requires n <= cap.
std::vector<BigInt> power_domination_polynomial(const Graph& g,
                                                int cap = kDefaultSubsetCap);

// True iff every vertex of Obs(G;S) lies in Obs(G;{v}) for some v in the
// support of S.
bool is_local_cover(const Graph& g, std::span<const int> support);
bool is_local_cover(const Graph& g, const Placement& p);

}  // namespace fpd
