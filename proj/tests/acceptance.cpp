// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "fpd/analysis.hpp"
#include "fpd/closed_forms.hpp"
#include "fpd/fragile.hpp"
#include "fpd/generators.hpp"
#include "fpd/graph.hpp"
#include "fpd/montecarlo.hpp"
#include "fpd/placement.hpp"
#include "fpd/poly.hpp"
#include "fpd/propagation.hpp"
#include "oracles.hpp"

using namespace fpd;

namespace {

int failures = 0;
std::vector<std::string> notes;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    notes.push_back(what);
  }
}

void report(int number, const std::string& title, int before) {
  bool ok = failures == before;
  std::printf("criterion %d: %s -- %s\n", number, ok ? "PASS" : "FAIL",
              title.c_str());
  if (!ok)
    for (std::size_t i = before; i < notes.size(); ++i)
      std::printf("    %s\n", notes[i].c_str());
}

Poly bern(std::initializer_list<BernsteinTerm> terms) {
  return poly_from_bernstein(std::vector<BernsteinTerm>(terms));
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

// ---- criterion 1 --------------------------------------------------------

void criterion_1() {
  int before = failures;
  auto start = std::chrono::steady_clock::now();
  Graph g = example_graph();
  auto report_spec = placement_spectrum(g, 2, true);
  double elapsed = ms_since(start);

  expect(report_spec.classes.size() == 10,
         "expected 10 classes, got " + std::to_string(report_spec.classes.size()));

  // the ten classes and their member placements (0-based indices)
  const std::vector<std::pair<Poly, std::set<std::string>>> expected{
      {bern({{BigInt(4), 1, 1}, {BigInt(2), 0, 2}}), {"1*2", "2*2", "5*2", "6*2"}},
      {bern({{BigInt(4), 1, 1}, {BigInt(3), 0, 2}}), {"1,2", "5,6"}},
      {bern({{BigInt(4), 1, 1}, {BigInt(4), 0, 2}}), {"1,5", "1,6", "2,5", "2,6"}},
      {bern({{BigInt(6), 1, 1}, {BigInt(3), 0, 2}}), {"0*2"}},
      {bern({{BigInt(5), 1, 1}, {BigInt(5), 0, 2}}), {"0,1", "0,2", "0,5", "0,6"}},
      {bern({{BigInt(7), 1, 1}, {BigInt(5), 0, 2}}), {"1,3", "2,3", "4,5", "4,6"}},
      {bern({{BigInt(8), 1, 1}, {BigInt(5), 0, 2}}), {"0,3", "0,4"}},
      {bern({{BigInt(10), 1, 1}, {BigInt(5), 0, 2}}), {"3*2", "4*2"}},
      {bern({{BigInt(7), 1, 1}, {BigInt(7), 0, 2}}), {"1,4", "2,4", "3,5", "3,6"}},
      {bern({{BigInt(10), 1, 1}, {BigInt(7), 0, 2}}), {"3,4"}},
  };
  for (const auto& [poly, members] : expected) {
    bool found = false;
    for (const auto& cls : report_spec.classes) {
      if (!(cls.poly == poly)) continue;
      found = true;
      std::set<std::string> got;
      for (const auto& m : cls.members) got.insert(m.to_string());
      expect(got == members, "membership mismatch for " + poly.to_string());
    }
    expect(found, "missing class " + poly.to_string());
  }
  expect(elapsed < 1000.0,
         "spectrum took " + std::to_string(elapsed) + " ms (limit 1000)");
  report(1, "fixture spectrum reproduces the ten size-2 classes (< 1 s)", before);
}

// ---- criterion 2 --------------------------------------------------------

void check_single_crossing(const Graph& g, const Placement& a, const Placement& b,
                           const Rational& root, const std::string& what) {
  const Rational tol(1, 1000000000);
  auto rep = compare_placements(g, a, b, tol);
  expect(rep.crossings.size() == 1,
         what + ": expected 1 crossing, got " + std::to_string(rep.crossings.size()));
  if (rep.crossings.size() == 1) {
    Rational err = rep.crossings[0] - root;
    if (err < 0) err = -err;
    expect(err <= tol, what + ": crossing misses the root by more than tol");
  }
}

void criterion_2() {
  int before = failures;
  Graph g = example_graph();
  Placement doubled_hub;
  doubled_hub.add(3, 2);
  Placement leaf_and_hub;
  leaf_and_hub.add(1);
  leaf_and_hub.add(4);
  check_single_crossing(g, doubled_hub, leaf_and_hub, Rational(2, 5),
                        "fixture {4,4} vs {2,5}");

  auto fam1 = gen_crossing_family(1, 12);
  check_single_crossing(fam1.graph, Placement::from_vertices(fam1.pds),
                        Placement::from_vertices(fam1.failed), Rational(1, 2),
                        "crossing family (1,12)");
  auto fam2 = gen_crossing_family(4, 22);
  check_single_crossing(fam2.graph, Placement::from_vertices(fam2.pds),
                        Placement::from_vertices(fam2.failed), Rational(2, 5),
                        "crossing family (4,22)");
  report(2, "crossings at 2/5, 1/2 and 2/5 within 1e-9", before);
}

// ---- criterion 3 --------------------------------------------------------

void criterion_3() {
  int before = failures;
  Graph k33 = complete_multipartite_graph(std::vector<int>{3, 3});
  const Rational tenth(1, 10);
  for (auto pair : {std::pair{0, 3}, {0, 1}, {1, 4}}) {
    Placement p;
    p.add(pair.first);
    p.add(pair.second);
    expect(prob_all_observed_poly(k33, p).eval(tenth) == Rational(81, 100),
           "K_{3,3} 2-set probability is not 81/100");
  }
  for (auto triple : {std::vector<int>{0, 1, 3}, {0, 1, 2}, {0, 3, 4}}) {
    Placement p = Placement::from_vertices(triple);
    expect(prob_all_observed_poly(k33, p).eval(tenth) == Rational(243, 250),
           "K_{3,3} 3-set probability is not 972/1000");
  }
  Graph s18 = star_graph(18);
  Placement everything;
  for (int v = 0; v < 18; ++v) everything.add(v);
  Rational whole = prob_all_observed_poly(s18, everything).eval(tenth);
  expect(format_rational_decimal(whole, 4) == "0.9482",
         "S_18 full-set probability does not round to 0.9482");
  Placement doubled_center;
  doubled_center.add(0, 2);
  expect(prob_all_observed_poly(s18, doubled_center).eval(tenth) == Rational(99, 100),
         "S_18 doubled-center probability is not 99/100");
  report(3, "worked probabilities: 81/100, 972/1000, 0.9482, 99/100", before);
}

// ---- criterion 4 --------------------------------------------------------

void criterion_4() {
  int before = failures;
  std::mt19937 rng(20240817);
  int checked = 0;
  while (checked < 500) {
    int n = 2 + static_cast<int>(rng() % 9);  // up to 10 vertices
    Graph g = fpd_test::random_connected_graph(rng, n);
    int size = 1 + static_cast<int>(rng() % std::min(n, 5));
    Placement p = Placement::from_vertices(fpd_test::random_subset(rng, n, size));
    if (!(expected_value_poly(g, p) == expected_value_coeffs(g, p))) {
      expect(false, "route mismatch on instance " + std::to_string(checked));
      break;
    }
    ++checked;
  }
  expect(checked == 500, "only " + std::to_string(checked) + " instances checked");
  report(4, "both expected-value routes agree on 500 random instances", before);
}

// ---- criterion 5 --------------------------------------------------------

std::vector<Graph> named_corpus_up_to_8() {
  std::vector<Graph> graphs;
  for (int n = 3; n <= 8; ++n) graphs.push_back(path_graph(n));
  for (int n = 3; n <= 8; ++n) graphs.push_back(cycle_graph(n));
  for (int n = 3; n <= 8; ++n) graphs.push_back(complete_graph(n));
  for (int n = 3; n <= 8; ++n) graphs.push_back(star_graph(n));
  for (int n = 4; n <= 8; ++n) graphs.push_back(wheel_graph(n));
  for (auto parts : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {2, 4}, {2, 5},
                                                  {2, 6}, {3, 3}, {3, 4}, {3, 5},
                                                  {4, 4}, {2, 2, 2}, {2, 2, 3},
                                                  {2, 2, 4}, {2, 3, 3}, {2, 2, 2, 2}})
    graphs.push_back(complete_multipartite_graph(parts));
  for (int n = 3; n <= 6; ++n) graphs.push_back(cycle_complement_graph(n));
  return graphs;
}

// direct k-rPDS evaluation straight from the definition, using the naive
// closure: minimum number of copy removals that can break the placement
int direct_max_k(const Graph& g, const Placement& p) {
  auto support = p.support();
  const int k = static_cast<int>(support.size());
  int best = p.size();
  for (std::uint64_t dead = 0; dead < (1ull << k); ++dead) {
    int killed = 0;
    std::vector<int> live;
    for (int i = 0; i < k; ++i) {
      if (dead & (1ull << i))
        killed += p.multiplicity(support[i]);
      else
        live.push_back(support[i]);
    }
    if (killed >= best) continue;
    if (!fpd_test::naive_is_pds(g, live)) best = killed;
  }
  return best - 1;
}

void enumerate_placements(int n, int size, bool multisets,
                          const std::function<void(const Placement&)>& visit) {
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = multisets ? 0 : i;
  if (!multisets && size > n) return;
  while (true) {
    visit(Placement::from_vertices(idx));
    int i;
    for (i = size - 1; i >= 0; --i) {
      int limit = multisets ? n - 1 : n - (size - i);
      if (idx[i] < limit) {
        ++idx[i];
        for (int j = i + 1; j < size; ++j)
          idx[j] = multisets ? idx[i] : idx[j - 1] + 1;
        break;
      }
    }
    if (i < 0) break;
  }
}

void criterion_5() {
  int before = failures;
  long disagreements = 0, placements = 0;
  auto corpus = named_corpus_up_to_8();
  for (const Graph& g : corpus) {
    const int n = g.vertex_count();
    for (int size = 1; size <= 4; ++size) {
      for (bool multisets : {false, true}) {
        enumerate_placements(n, size, multisets, [&](const Placement& p) {
          if (!multisets && !p.is_set()) return;
          ++placements;
          auto rep = robustness_report(g, p);
          if (rep.max_k_rpds != direct_max_k(g, p)) ++disagreements;
          if (p.is_set() &&
              (!rep.max_k_fault_tolerant || *rep.max_k_fault_tolerant != rep.max_k_rpds))
            ++disagreements;
        });
      }
    }
  }
  expect(disagreements == 0,
         std::to_string(disagreements) + " robustness disagreements");
  expect(placements > 10000, "suspiciously few placements enumerated");

  for (const Graph& g : corpus) {
    auto summary = max_fault_tolerance(g);
    int brute = fpd_test::brute_force_failed_pd_number(g);
    if (summary.failed_power_domination_number != brute) {
      expect(false, "polynomial-route failed-number mismatch on an n=" +
                        std::to_string(g.vertex_count()) + " graph");
      break;
    }
  }
  report(5,
         "robustness classifications agree with the definition on the named "
         "corpus; max fault tolerance matches brute force",
         before);
}

// ---- criterion 6 --------------------------------------------------------

void criterion_6() {
  int before = failures;
  // stars
  for (int n = 3; n <= 8; ++n) {
    Graph g = star_graph(n);
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
      std::vector<int> verts;
      for (int v = 0; v < n; ++v)
        if (mask & (1ull << v)) verts.push_back(v);
      Placement p = Placement::from_vertices(verts);
      bool center = mask & 1;
      int s = static_cast<int>(verts.size());
      if (!(star_expected(n, s, center) == expected_value_poly(g, p)))
        expect(false, "star E mismatch at n=" + std::to_string(n));
      if (!(star_prob_full(n, s, center) == prob_all_observed_poly(g, p)))
        expect(false, "star prob mismatch at n=" + std::to_string(n));
    }
  }

  // complete multipartite graphs; the formula implemented is the
  // enumeration-consistent decomposition described in the README
  for (const auto& parts : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 3},
                                                         {2, 2, 2}}) {
    Graph g = complete_multipartite_graph(parts);
    std::vector<int> counts(parts.size(), 0);
    while (true) {
      int total = 0;
      bool valid = true;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        total += counts[i];
        if (counts[i] > parts[i]) valid = false;
      }
      if (valid && total >= 1 && total <= 4) {
        Placement p;
        int base = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          for (int j = 0; j < counts[i]; ++j) p.add(base + j);
          base += parts[i];
        }
        if (!(multipartite_expected(parts, counts) == expected_value_poly(g, p)))
          expect(false, "multipartite mismatch");
      }
      std::size_t pos = 0;
      while (pos < counts.size() && counts[pos] == 4) counts[pos++] = 0;
      if (pos == counts.size()) break;
      ++counts[pos];
    }
  }

  // barbells over the full stated family
  std::vector<Graph> sides{complete_graph(1), complete_graph(3), complete_graph(4),
                           cycle_graph(4),    cycle_graph(5),    wheel_graph(5),
                           cycle_complement_graph(4)};
  for (const Graph& g1 : sides)
    for (const Graph& g2 : sides) {
      const int l = g1.vertex_count(), n = g2.vertex_count();
      for (int m = 0; m <= 3; ++m) {
        Graph g = gen_generalized_barbell(g1, 0, g2, 0, m);
        for (int r = 0; r <= std::min(2, l); ++r)
          for (int t = 0; t <= std::min(2, n); ++t)
            for (int s = 0; s <= std::min(2, m); ++s) {
              if (r + s + t == 0) continue;
              Placement p;
              for (int i = 0; i < r; ++i) p.add(i);
              for (int i = 0; i < t; ++i) p.add(l + i);
              for (int i = 0; i < s; ++i) p.add(l + n + i);
              if (!(barbell_expected(l, n, m, r, s, t) == expected_value_poly(g, p)))
                expect(false, "barbell mismatch at l=" + std::to_string(l) +
                                  " n=" + std::to_string(n));
            }
      }
    }
  report(6, "closed forms match enumeration (stars, multipartite, barbells)",
         before);
}

// ---- criterion 7 --------------------------------------------------------

void criterion_7() {
  int before = failures;
  std::mt19937 rng(424242);
  std::vector<Rational> grid;
  for (int i = 0; i <= 100; ++i) {
    Rational q(i, 100);
    q.canonicalize();
    grid.push_back(q);
  }

  // monotonicity under adding a PMU, 200 random instances
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    Graph g = fpd_test::random_connected_graph(rng, n);
    Placement p;
    for (int v : fpd_test::random_subset(rng, n, 1 + static_cast<int>(rng() % 3)))
      p.add(v, 1 + static_cast<int>(rng() % 2));
    Placement bigger = p;
    bigger.add(static_cast<int>(rng() % n));
    Poly e = expected_value_poly(g, p);
    Poly eb = expected_value_poly(g, bigger);
    for (const Rational& q : grid)
      if (!(e.eval(q) <= eb.eval(q))) {
        expect(false, "monotonicity violated");
        break;
      }
  }

  // floors, ceiling, local covers
  int pds_cases = 0, cover_cases = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    Graph g = fpd_test::random_connected_graph(rng, n);
    int size = 1 + static_cast<int>(rng() % 3);
    auto verts = fpd_test::random_subset(rng, n, size);
    Placement p = Placement::from_vertices(verts);
    Poly e = expected_value_poly(g, p);
    Placement everything;
    for (int v = 0; v < n; ++v) everything.add(v);
    Poly top = expected_value_poly(g, everything);
    for (const Rational& q : grid)
      if (!(e.eval(q) <= top.eval(q))) {
        expect(false, "whole-set ceiling violated");
        break;
      }
    if (is_power_dominating(g, verts)) {
      ++pds_cases;
      Poly floor = bern({{BigInt(n), 0, size}});
      for (const Rational& q : grid)
        if (!(e.eval(q) >= floor.eval(q))) {
          expect(false, "power-dominating floor violated");
          break;
        }
    }
    if (is_local_cover(g, verts)) {
      ++cover_cases;
      int obs = static_cast<int>(fpd_test::naive_observed(g, verts).size());
      Poly floor = bern({{BigInt(obs), 0, 1}});
      for (const Rational& q : grid)
        if (!(e.eval(q) >= floor.eval(q))) {
          expect(false, "local-cover floor violated");
          break;
        }
    }
  }
  expect(pds_cases > 0 && cover_cases > 0, "property corpus too thin");

  // component additivity
  for (int trial = 0; trial < 40; ++trial) {
    Graph a = fpd_test::random_connected_graph(rng, 3 + static_cast<int>(rng() % 3));
    Graph b = fpd_test::random_connected_graph(rng, 3 + static_cast<int>(rng() % 3));
    Graph both = disjoint_union(a, b);
    Placement pa = Placement::from_vertices(
        fpd_test::random_subset(rng, a.vertex_count(), 1 + static_cast<int>(rng() % 2)));
    Placement pb = Placement::from_vertices(
        fpd_test::random_subset(rng, b.vertex_count(), 1 + static_cast<int>(rng() % 2)));
    Placement joint;
    for (const auto& [v, m] : pa.entries()) joint.add(v, m);
    for (const auto& [v, m] : pb.entries()) joint.add(v + a.vertex_count(), m);
    if (!(expected_value_poly(both, joint) ==
          expected_value_poly(a, pa) + expected_value_poly(b, pb))) {
      expect(false, "component additivity violated");
      break;
    }
  }

  // binomial identities as polynomial facts
  for (int n = 1; n <= 10; ++n) {
    std::vector<BernsteinTerm> unity, mean;
    BigInt alternating = 0;
    for (int k = 0; k <= n; ++k) {
      unity.push_back({binomial(n, k), n - k, k});
      mean.push_back({BigInt(k) * binomial(n, k), n - k, k});
      BigInt term = binomial(n, k);
      alternating += (k % 2 == 0) ? term : -term;
    }
    expect(poly_from_bernstein(unity) == Poly(BigInt(1)), "unity identity failed");
    expect(poly_from_bernstein(mean) == bern({{BigInt(n), 0, 1}}),
           "mean identity failed");
    expect(alternating == 0, "alternating identity failed");
  }

  // linear construction exactness with and without subdivisions
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> parts{2 + static_cast<int>(rng() % 2),
                           2 + static_cast<int>(rng() % 2)};
    std::map<std::pair<int, int>, int> subs;
    if (trial % 2 == 1) {
      subs[{0, static_cast<int>(rng() % (parts[0] + 2))}] =
          1 + static_cast<int>(rng() % 3);
      subs[{1, static_cast<int>(rng() % (parts[1] + 2))}] =
          static_cast<int>(rng() % 3);
    }
    auto res = gen_linear_construct(parts, subs);
    Poly expected = bern({{BigInt(res.graph.vertex_count()), 0, 1}});
    if (!(expected_value_poly(res.graph, Placement::from_vertices(res.apexes)) ==
          expected)) {
      expect(false, "linear construction exactness violated");
      break;
    }
  }
  report(7, "property suites: monotonicity, floors, ceiling, additivity, "
            "identities, linear exactness",
         before);
}

// ---- criterion 8 --------------------------------------------------------

void criterion_8() {
  int before = failures;
  Graph g = example_graph();
  Placement p;
  p.add(3);
  p.add(4);
  Poly exact = expected_value_poly(g, p);
  Poly prob = prob_all_observed_poly(g, p);
  for (int tenths : {1, 3, 7}) {
    const double q = tenths / 10.0;
    auto start = std::chrono::steady_clock::now();
    auto est = simulate(g, p, q, 100000, 20240817);
    double elapsed = ms_since(start);
    Rational qr(tenths, 10);
    qr.canonicalize();
    double truth = exact.eval(qr).get_d();
    double prob_truth = prob.eval(qr).get_d();
    expect(std::abs(est.mean_observed - truth) <= 4.0 * est.std_error,
           "mean outside 4 standard errors at q=" + std::to_string(q));
    expect(std::abs(est.full_obs_frequency - prob_truth) <= 0.01,
           "frequency off by more than 0.01 at q=" + std::to_string(q));
    expect(elapsed < 10000.0, "simulation exceeded 10 s per point");
    auto again = simulate(g, p, q, 100000, 20240817);
    expect(again.mean_observed == est.mean_observed &&
               again.full_obs_frequency == est.full_obs_frequency,
           "simulation is not deterministic under a fixed seed");
  }
  report(8, "Monte Carlo matches exact values, deterministic, < 10 s per point",
         before);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance check(s) failed\n", failures);
  return 1;
}
