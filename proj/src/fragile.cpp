#include "fpd/fragile.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "fpd/errors.hpp"
#include "fpd/propagation.hpp"

namespace fpd {

namespace {

struct SupportInfo {
  std::vector<int> verts;  // distinct support, ascending
  std::vector<int> mults;
};

SupportInfo checked_support(const Graph& g, const Placement& p, int cap,
                            const char* op) {
  if (p.empty())
    throw ParameterError(std::string(op) + ": placement must be nonempty");
  p.check_against(g);
  SupportInfo info;
  for (const auto& [v, m] : p.entries()) {
    info.verts.push_back(v);
    info.mults.push_back(m);
  }
  const int k = static_cast<int>(info.verts.size());
  if (k > cap)
    throw ResourceError(std::string(op) + ": " + std::to_string(k) +
                        " distinct support vertices exceed enumeration cap " +
                        std::to_string(cap));
  if (k > 62)
    throw ResourceError(std::string(op) +
                        ": support enumeration is limited to 62 vertices");
  return info;
}

void subset_vertices(const SupportInfo& info, std::uint64_t mask,
                     std::vector<int>& out) {
  out.clear();
  for (std::size_t i = 0; i < info.verts.size(); ++i)
    if (mask & (1ull << i)) out.push_back(info.verts[i]);
}

Rational rational_pow(const Rational& base, int e) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(),
             static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(),
             static_cast<unsigned long>(e));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

void check_probability_open(const Rational& q, const char* name) {
  if (!(q > 0 && q < 1))
    throw ParameterError(std::string(name) + " must lie in (0,1)");
}

}  // namespace

Poly expected_value_poly(const Graph& g, const Placement& p, int cap) {
  SupportInfo info = checked_support(g, p, cap, "expected_value_poly");
  const int k = static_cast<int>(info.verts.size());
  ObservationEngine engine(g);
  std::vector<int> buf;

  if (p.is_set()) {
    // group survival patterns by subset size
    std::vector<BigInt> total_by_size(k + 1, BigInt(0));
    for (std::uint64_t sub = 0; sub < (1ull << k); ++sub) {
      subset_vertices(info, sub, buf);
      engine.run(buf);
      total_by_size[std::popcount(sub)] += engine.observed_count();
    }
    std::vector<BernsteinTerm> terms;
    for (int j = 0; j <= k; ++j)
      terms.push_back({total_by_size[j], k - j, j});
    return poly_from_bernstein(terms);
  }

  // A vertex with multiplicity m keeps at least one live PMU with
  // probability 1 - q^m; vertices survive independently.
  std::vector<Poly> live(k), dead(k);
  for (int i = 0; i < k; ++i) {
    dead[i] = Poly::monomial(1, info.mults[i]);
    live[i] = Poly(1) - dead[i];
  }
  Poly total;
  for (std::uint64_t sub = 0; sub < (1ull << k); ++sub) {
    subset_vertices(info, sub, buf);
    engine.run(buf);
    const int count = engine.observed_count();
    if (count == 0) continue;
    Poly term{BigInt(count)};
    for (int i = 0; i < k; ++i) term *= (sub & (1ull << i)) ? live[i] : dead[i];
    total += term;
  }
  return total;
}

Poly expected_value_coeffs(const Graph& g, const Placement& p, int cap) {
  if (!p.is_set())
    throw ParameterError(
        "expected_value_coeffs requires a set placement; use "
        "expected_value_poly for multisets");
  SupportInfo info = checked_support(g, p, cap, "expected_value_coeffs");
  const int s = static_cast<int>(info.verts.size());
  ObservationEngine engine(g);
  std::vector<int> buf;
  std::vector<BigInt> coeffs(s + 1, BigInt(0));
  for (std::uint64_t sub = 0; sub < (1ull << s); ++sub) {
    subset_vertices(info, sub, buf);
    engine.run(buf);
    const int count = engine.observed_count();
    if (count == 0) continue;
    const int w = std::popcount(sub);
    for (int r = 0; r <= w; ++r) {
      BigInt contrib = binomial(w, r) * count;
      if ((w - r) % 2 != 0) contrib = -contrib;
      coeffs[s - r] += contrib;
    }
  }
  return Poly::from_coeffs(std::move(coeffs));
}

Poly prob_all_observed_poly(const Graph& g, const Placement& p, int cap) {
  SupportInfo info = checked_support(g, p, cap, "prob_all_observed_poly");
  const int k = static_cast<int>(info.verts.size());
  ObservationEngine engine(g);
  std::vector<int> buf;

  if (p.is_set()) {
    std::vector<BigInt> pds_by_size(k + 1, BigInt(0));
    for (std::uint64_t sub = 0; sub < (1ull << k); ++sub) {
      subset_vertices(info, sub, buf);
      engine.run(buf);
      if (engine.fully_observed()) pds_by_size[std::popcount(sub)] += 1;
    }
    std::vector<BernsteinTerm> terms;
    for (int j = 0; j <= k; ++j) terms.push_back({pds_by_size[j], k - j, j});
    return poly_from_bernstein(terms);
  }

  std::vector<Poly> live(k), dead(k);
  for (int i = 0; i < k; ++i) {
    dead[i] = Poly::monomial(1, info.mults[i]);
    live[i] = Poly(1) - dead[i];
  }
  Poly total;
  for (std::uint64_t sub = 0; sub < (1ull << k); ++sub) {
    subset_vertices(info, sub, buf);
    engine.run(buf);
    if (!engine.fully_observed()) continue;
    Poly term{BigInt(1)};
    for (int i = 0; i < k; ++i) term *= (sub & (1ull << i)) ? live[i] : dead[i];
    total += term;
  }
  return total;
}

namespace {

// Largest k for which every removal of k PMU copies leaves a power
// dominating support, computed from the definition: over all subsets D of
// the support whose complements fail to power dominate, take the minimum
// total multiplicity of D; that many removals is the cheapest way to
// reach a failing configuration.
int max_k_rpds_direct(const Graph& g, const SupportInfo& info) {
  const int k = static_cast<int>(info.verts.size());
  ObservationEngine engine(g);
  std::vector<int> live;
  long best = 0;
  for (const auto m : info.mults) best += m;  // D = entire support always fails
  for (std::uint64_t dead = 0; dead < (1ull << k); ++dead) {
    long killed = 0;
    live.clear();
    for (int i = 0; i < k; ++i) {
      if (dead & (1ull << i))
        killed += info.mults[i];
      else
        live.push_back(info.verts[i]);
    }
    if (killed >= best) continue;
    engine.run(live);
    if (!engine.fully_observed()) best = killed;
  }
  return static_cast<int>(best) - 1;
}

}  // namespace

RobustnessReport robustness_report(const Graph& g, const Placement& p, int cap) {
  SupportInfo info = checked_support(g, p, cap, "robustness_report");
  const int n = g.vertex_count();
  if (n == 0) throw ParameterError("robustness_report: empty graph");

  RobustnessReport report;
  report.expected = expected_value_poly(g, p, cap);
  report.is_pds = report.expected.coeff(0) == n;

  int poly_k = -1;
  if (report.is_pds) {
    int j = 1;
    while (j <= report.expected.degree() && report.expected.coeff(j) == 0) ++j;
    poly_k = j - 1;
  }
  const int direct_k = max_k_rpds_direct(g, info);
  if (poly_k != direct_k)
    throw std::logic_error("robustness classification routes disagree");

  report.max_k_rpds = poly_k;
  if (p.is_set()) report.max_k_fault_tolerant = poly_k;
  if (report.is_pds) {
    // E = n - q^{k+1} h(q); h(0) != 0 because k is maximal
    Poly gap = Poly(BigInt(n)) - report.expected;
    std::vector<BigInt> shifted(gap.coeffs().begin() + (poly_k + 1),
                                gap.coeffs().end());
    report.h_poly = Poly::from_coeffs(std::move(shifted));
  }
  return report;
}

FaultToleranceSummary max_fault_tolerance(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n == 0) throw ParameterError("max_fault_tolerance: empty graph");
  Placement everything;
  for (int v = 0; v < n; ++v) everything.add(v);

  FaultToleranceSummary summary;
  summary.expected = expected_value_poly(g, everything, cap);
  // V(G) power dominates, so the constant term is n and E(1) = 0
  int j = 1;
  while (j <= summary.expected.degree() && summary.expected.coeff(j) == 0) ++j;
  summary.max_k = j - 1;
  summary.failed_power_domination_number = n - summary.max_k - 1;
  return summary;
}

int min_size_for_confidence(int failed_pd_number, const Rational& q,
                            const Rational& eps) {
  if (failed_pd_number < 0)
    throw ParameterError("failed power domination number must be >= 0");
  check_probability_open(q, "q");
  check_probability_open(eps, "eps");
  // smallest integer t with q^{t-f} <= eps, evaluated exactly
  Rational power(1);
  int t = failed_pd_number;
  while (!(power <= eps)) {
    power *= q;
    power.canonicalize();
    ++t;
  }
  return t;
}

Rational rpds_observation_lower_bound(int s, int k, const Rational& q) {
  if (s < 1) throw ParameterError("placement size must be >= 1");
  if (k < 0) throw ParameterError("robustness level must be >= 0");
  check_probability_open(q, "q");
  Rational one_minus_q = Rational(1) - q;
  Rational tail(0);
  for (int i = 0; i <= s - k - 1; ++i)
    tail += Rational(binomial(s, i)) * rational_pow(q, s - i) *
            rational_pow(one_minus_q, i);
  Rational result = Rational(1) - tail;
  result.canonicalize();
  return result;
}

Rational connected_full_observation_lower_bound(int n, const Rational& q) {
  if (n < 3) throw ParameterError("bound requires n >= 3");
  check_probability_open(q, "q");
  Rational one_minus_q = Rational(1) - q;
  Rational result = Rational(binomial(n, 2)) * rational_pow(q, 2) *
                        rational_pow(one_minus_q, n - 2) +
                    Rational(n) * q * rational_pow(one_minus_q, n - 1) +
                    rational_pow(one_minus_q, n);
  result.canonicalize();
  return result;
}

}  // namespace fpd
