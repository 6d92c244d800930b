#include "fpd/analysis.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "fpd/errors.hpp"

namespace fpd {

namespace {

// non-decreasing index tuples = multisets; strictly increasing = sets
bool advance_tuple(std::vector<int>& idx, int n, bool multisets) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    int limit = multisets ? n - 1 : n - (k - i);
    if (idx[i] < limit) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = multisets ? idx[i] : idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

BigInt placement_count(int n, int k, bool multisets) {
  return multisets ? binomial(n + k - 1, k) : binomial(n, k);
}

}  // namespace

SpectrumReport placement_spectrum(const Graph& g, int k, bool multisets,
                                  long long cap) {
  const int n = g.vertex_count();
  if (k < 1) throw ParameterError("placement size must be >= 1");
  if (!multisets && k > n)
    throw ParameterError("set placements cannot exceed the vertex count");
  if (n == 0) throw ParameterError("empty graph");
  BigInt total = placement_count(n, k, multisets);
  if (total > BigInt(std::to_string(cap)))
    throw ResourceError("spectrum enumeration of " + total.get_str() +
                        " placements exceeds cap " + std::to_string(cap));

  std::map<std::vector<BigInt>, std::vector<Placement>> groups;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = multisets ? 0 : i;
  while (true) {
    Placement p = Placement::from_vertices(idx);
    Poly e = expected_value_poly(g, p);
    groups[e.coeffs()].push_back(std::move(p));
    if (!advance_tuple(idx, n, multisets)) break;
  }

  SpectrumReport report;
  report.k = k;
  report.multiset_mode = multisets;
  for (auto& [coeffs, members] : groups) {
    SpectrumClass cls;
    cls.poly = Poly::from_coeffs(coeffs);
    cls.members = std::move(members);
    report.classes.push_back(std::move(cls));
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const SpectrumClass& a, const SpectrumClass& b) {
              BigInt a0 = a.poly.coeff(0), b0 = b.poly.coeff(0);
              if (a0 != b0) return a0 < b0;
              return a.poly.coeffs() < b.poly.coeffs();
            });
  return report;
}

namespace {

IntervalLeader leader_between(const Poly& pa, const Poly& pb, const Rational& lo,
                              const Rational& hi) {
  Poly diff = pa - pb;
  if (diff.is_zero()) return IntervalLeader::equal;
  // probe enough points that one must miss every root of the difference
  const int tries = diff.degree() + 1;
  for (int j = 1; j <= tries; ++j) {
    Rational x = lo + (hi - lo) * j / (tries + 1);
    x.canonicalize();
    Rational v = diff.eval(x);
    if (v > 0) return IntervalLeader::a;
    if (v < 0) return IntervalLeader::b;
  }
  return IntervalLeader::equal;
}

}  // namespace

CompareReport compare_placements(const Graph& g, const Placement& a,
                                 const Placement& b, const Rational& tol) {
  CompareReport report;
  report.a = a;
  report.b = b;
  report.poly_a = expected_value_poly(g, a);
  report.poly_b = expected_value_poly(g, b);

  if (report.poly_a == report.poly_b) {
    report.intervals.push_back({Rational(0), Rational(1), IntervalLeader::equal});
    return report;
  }
  report.crossings =
      sign_crossings(report.poly_a, report.poly_b, Rational(0), Rational(1), tol);

  std::vector<Rational> bounds;
  bounds.push_back(Rational(0));
  bounds.insert(bounds.end(), report.crossings.begin(), report.crossings.end());
  bounds.push_back(Rational(1));
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
    report.intervals.push_back(
        {bounds[i], bounds[i + 1],
         leader_between(report.poly_a, report.poly_b, bounds[i], bounds[i + 1])});
  return report;
}

std::vector<SweepRow> sweep(const Graph& g, const Placement& p,
                            std::span<const Rational> grid,
                            const SweepOptions& options) {
  for (const Rational& q : grid)
    if (q < 0 || q > 1) throw ParameterError("grid point outside [0,1]");
  Poly expected = expected_value_poly(g, p);
  Poly prob = prob_all_observed_poly(g, p);

  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    SweepRow row;
    row.q = grid[i];
    row.expected = expected.eval(grid[i]);
    row.prob_full = prob.eval(grid[i]);
    if (options.with_sim)
      row.sim = simulate(g, p, grid[i].get_d(), options.sim_trials,
                         options.sim_seed + i);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows, int digits) {
  bool with_sim =
      std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.sim.has_value(); });
  std::ostringstream out;
  out << "q,expected,prob_full";
  if (with_sim) out << ",sim_mean,sim_stderr";
  out << "\n";
  char buf[64];
  for (const SweepRow& row : rows) {
    out << format_rational_decimal(row.q, digits) << ","
        << format_rational_decimal(row.expected, digits) << ","
        << format_rational_decimal(row.prob_full, digits);
    if (with_sim) {
      if (row.sim) {
        std::snprintf(buf, sizeof buf, "%.*f", digits, row.sim->mean_observed);
        out << "," << buf;
        std::snprintf(buf, sizeof buf, "%.*f", digits, row.sim->std_error);
        out << "," << buf;
      } else {
        out << ",,";
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace fpd
