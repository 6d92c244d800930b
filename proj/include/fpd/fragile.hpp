#pragma once

#include <optional>

#include "fpd/graph.hpp"
#include "fpd/placement.hpp"
#include "fpd/poly.hpp"

namespace fpd {

// Cap on the number of distinct support vertices in survival-pattern
// enumerations (2^distinct work).
inline constexpr int kDefaultSupportCap = 25;

// Expected number of observed vertices as an exact polynomial in the
// failure probability q. Each PMU copy fails independently with
// probability q; a vertex stays live while at least one of its copies
// survives, so a vertex with multiplicity m contributes survival factor
// 1-q^m and failure factor q^m. E(0) = |Obs(G;support)|, E(1) = 0.
Poly expected_value_poly(const Graph& g, const Placement& p,
                         int cap = kDefaultSupportCap);

// Same polynomial computed coefficient-wise by inclusion-exclusion:
// the coefficient of q^{|S|-r} is
//   sum over W subseteq S, |W| >= r of (-1)^{|W|-r} C(|W|,r) |Obs(G;W)|.
// Set placements only; serves as an independent cross-validation route.
Poly expected_value_coeffs(const Graph& g, const Placement& p,
                           int cap = kDefaultSupportCap);

// Probability that the whole graph is observed, as an exact polynomial:
// the sum of survival-pattern weights over support subsets that power
// dominate. For p = V(G) this equals sum_i p(G;i) q^{n-i} (1-q)^i.
Poly prob_all_observed_poly(const Graph& g, const Placement& p,
                            int cap = kDefaultSupportCap);

struct RobustnessReport {
  bool is_pds = false;
  // Largest k such that removing any k PMU copies leaves a power
  // dominating set; -1 when the placement is not even power dominating.
  int max_k_rpds = -1;
  // For set placements this coincides with max_k_rpds; unset for
  // multisets.
  std::optional<int> max_k_fault_tolerant;
  // E = n - q^{k+1} h(q) with h(0) != 0, present when is_pds.
  std::optional<Poly> h_poly;
  Poly expected;
};

// Classifies robustness from the shape of the expected value polynomial
// (constant coefficient n, zero coefficients through q^k), cross-checked
// against the direct definition by survival-pattern enumeration.
RobustnessReport robustness_report(const Graph& g, const Placement& p,
                                   int cap = kDefaultSupportCap);

struct FaultToleranceSummary {
  int max_k = -1;  // largest k for which V(G) is k-fault-tolerant
  int failed_power_domination_number = 0;  // n - max_k - 1
  Poly expected;                           // E(G; V(G), q)
};

// Writes E(G;V(G),q) = n - q^{k+1} h(q) with h(0) != 0 and reports that k
// together with n - k - 1. Requires n <= cap.
FaultToleranceSummary max_fault_tolerance(const Graph& g,
                                          int cap = kDefaultSupportCap);

// Smallest integer |S| with q^{|S|-f} <= eps, i.e. the least size
// guaranteeing full observation with probability >= 1-eps on a graph
// whose failed power domination number is f. q and eps must lie in (0,1).
int min_size_for_confidence(int failed_pd_number, const Rational& q,
                            const Rational& eps);

// 1 - sum_{i=0}^{s-k-1} C(s,i) q^{s-i} (1-q)^i, the full-observation
// probability lower bound for a k-robust placement of size s.
Rational rpds_observation_lower_bound(int s, int k, const Rational& q);

// C(n,2) q^2 (1-q)^{n-2} + n q (1-q)^{n-1} + (1-q)^n, the full-observation
// lower bound for a connected graph on n >= 3 vertices with PMUs
// everywhere.
Rational connected_full_observation_lower_bound(int n, const Rational& q);

}  // namespace fpd
