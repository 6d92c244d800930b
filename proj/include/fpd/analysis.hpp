#pragma once

#include <optional>
#include <vector>

#include "fpd/fragile.hpp"
#include "fpd/graph.hpp"
#include "fpd/montecarlo.hpp"
#include "fpd/placement.hpp"
#include "fpd/poly.hpp"

namespace fpd {

inline constexpr long long kDefaultSpectrumCap = 1'000'000;

struct SpectrumClass {
  Poly poly;
  std::vector<Placement> members;  // ascending
};

struct SpectrumReport {
  int k = 0;
  bool multiset_mode = true;
  // Partition of all size-k placements by expected value polynomial,
  // sorted by value at q = 0 then lexicographic coefficients.
  std::vector<SpectrumClass> classes;
};

SpectrumReport placement_spectrum(const Graph& g, int k, bool multisets,
                                  long long cap = kDefaultSpectrumCap);

enum class IntervalLeader { a, b, equal };

struct DominanceInterval {
  Rational lo;
  Rational hi;
  IntervalLeader leader;
};

struct CompareReport {
  Placement a;
  Placement b;
  Poly poly_a;
  Poly poly_b;
  std::vector<Rational> crossings;          // inside (0,1)
  std::vector<DominanceInterval> intervals;  // cover (0,1), leaders alternate
};

CompareReport compare_placements(const Graph& g, const Placement& a,
                                 const Placement& b, const Rational& tol);

struct SweepRow {
  Rational q;
  Rational expected;
  Rational prob_full;
  std::optional<SimEstimate> sim;
};

struct SweepOptions {
  bool with_sim = false;
  long long sim_trials = 100000;
  std::uint64_t sim_seed = 0;
};

// Exact evaluation of E and Prob_full on a rational grid in [0,1], with an
// optional simulated column.
std::vector<SweepRow> sweep(const Graph& g, const Placement& p,
                            std::span<const Rational> grid,
                            const SweepOptions& options = {});

// CSV with fixed header q,expected,prob_full[,sim_mean,sim_stderr];
// `digits` controls decimal rendering only.
std::string sweep_to_csv(const std::vector<SweepRow>& rows, int digits = 9);

}  // namespace fpd
