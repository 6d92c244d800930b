#include "fpd/closed_forms.hpp"

#include "fpd/errors.hpp"

namespace fpd {

namespace {

Poly q_pow(int e) { return Poly::monomial(1, e); }

Poly one_minus_q_pow(int e) {
  return poly_from_bernstein({{BigInt(1), 0, e}});
}

void check_star(int n, int s, bool contains_center) {
  if (n < 3) throw ParameterError("star formulas require n >= 3");
  if (s < 1 || s > n) throw ParameterError("placement size must lie in [1, n]");
  if (!contains_center && s > n - 1)
    throw ParameterError("without the universal vertex at most n-1 PMUs fit");
}

void check_multipartite(std::span<const int> part_sizes,
                        std::span<const int> picked) {
  if (part_sizes.size() < 2)
    throw ParameterError("multipartite formulas require >= 2 parts");
  if (picked.size() != part_sizes.size())
    throw ParameterError("one picked count per part required");
  int total = 0;
  for (std::size_t i = 0; i < part_sizes.size(); ++i) {
    if (part_sizes[i] < 2)
      throw ParameterError("multipartite formulas require part sizes >= 2");
    if (picked[i] < 0 || picked[i] > part_sizes[i])
      throw ParameterError("picked count outside [0, part size]");
    total += picked[i];
  }
  if (total < 1) throw ParameterError("placement must be nonempty");
}

}  // namespace

Poly star_expected(int n, int s, bool contains_center) {
  check_star(n, s, contains_center);
  if (!contains_center) {
    // 1 + s(1-q) - q^s, plus boundary corrections near full leaf coverage
    Poly e = Poly(1) + BigInt(s) * one_minus_q_pow(1) - q_pow(s);
    if (s == n - 2) e += one_minus_q_pow(s);
    if (s == n - 1) e += poly_from_bernstein({{BigInt(s), 1, s - 1}});
    return e;
  }
  // n(1-q) + (s-1)q(1-q) + q - q^s
  Poly e = BigInt(n) * one_minus_q_pow(1) +
           poly_from_bernstein({{BigInt(s - 1), 1, 1}}) + q_pow(1) - q_pow(s);
  if (s == n - 1) e += poly_from_bernstein({{BigInt(1), 1, s - 1}});
  if (s == n) e += poly_from_bernstein({{BigInt(s - 1), 2, s - 2}});
  return e;
}

Poly star_prob_full(int n, int s, bool contains_center) {
  check_star(n, s, contains_center);
  if (!contains_center) {
    if (s <= n - 3) return Poly();  // the graph can never be fully observed
    if (s == n - 2) return one_minus_q_pow(s);
    return one_minus_q_pow(s) + poly_from_bernstein({{BigInt(s), 1, s - 1}});
  }
  Poly p = one_minus_q_pow(1);
  if (s >= n - 1) p += poly_from_bernstein({{BigInt(1), 1, s - 1}});
  if (s == n) p += poly_from_bernstein({{BigInt(s - 1), 2, s - 2}});
  return p;
}

Poly multipartite_two_parts_prob(std::span<const int> part_sizes,
                                 std::span<const int> picked) {
  check_multipartite(part_sizes, picked);
  const int k = static_cast<int>(part_sizes.size());
  int total = 0;
  for (int l : picked) total += l;
  // 1 - sum_i q^{l-l_i} + (k-1) q^l
  Poly p(1);
  for (int i = 0; i < k; ++i) p -= q_pow(total - picked[i]);
  p += BigInt(k - 1) * q_pow(total);
  return p;
}

Poly multipartite_expected(std::span<const int> part_sizes,
                           std::span<const int> picked) {
  check_multipartite(part_sizes, picked);
  const int k = static_cast<int>(part_sizes.size());
  int order = 0, total = 0;
  for (int r : part_sizes) order += r;
  for (int l : picked) total += l;

  Poly e = BigInt(order) * multipartite_two_parts_prob(part_sizes, picked);
  for (int t = 0; t < k; ++t) {
    const int lt = picked[t];
    if (lt == 0) continue;
    std::vector<BernsteinTerm> inner;
    for (int i = 1; i <= lt; ++i) {
      // i survivors inside part t: the other parts force the last
      // unobserved vertex of the part when at most one remains
      const int obs = (part_sizes[t] - i <= 1) ? order : order - part_sizes[t] + i;
      inner.push_back({binomial(lt, i) * obs, lt - i, i});
    }
    e += q_pow(total - lt) * poly_from_bernstein(inner);
  }
  return e;
}

Poly barbell_expected(int l, int n, int m, int r, int s, int t) {
  if (l < 1 || n < 1) throw ParameterError("side graphs must be nonempty");
  if (m < 0) throw ParameterError("central path length must be >= 0");
  if (r < 0 || r > l) throw ParameterError("r must lie in [0, l]");
  if (t < 0 || t > n) throw ParameterError("t must lie in [0, n]");
  if (s < 0 || s > m) throw ParameterError("s must lie in [0, m]");

  Poly qr = q_pow(r), qt = q_pow(t);
  Poly live_r = Poly(1) - qr;
  Poly live_t = Poly(1) - qt;
  Poly live_s = Poly(1) - q_pow(s);
  Poly e = BigInt(l + m + n) * (live_r * live_t);
  e += BigInt(l + m + 1) * (live_r * qt);
  e += BigInt(m + n + 1) * (qr * live_t);
  e += BigInt(m + 2) * (qr * qt * live_s);
  return e;
}

}  // namespace fpd
