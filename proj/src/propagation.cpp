#include "fpd/propagation.hpp"

#include <algorithm>

#include "fpd/errors.hpp"

namespace fpd {

ObservationEngine::ObservationEngine(const Graph& g)
    : g_(&g), n_(g.vertex_count()), observed_(n_, 0), unobserved_deg_(n_, 0) {}

void ObservationEngine::observe(int v) {
  if (!observed_[v]) {
    observed_[v] = 1;
    ++count_;
    queue_.push_back(v);
  }
}

void ObservationEngine::run(std::span<const int> support) {
  std::fill(observed_.begin(), observed_.end(), 0);
  for (int v = 0; v < n_; ++v) unobserved_deg_[v] = g_->degree(v);
  queue_.clear();
  forcers_.clear();
  count_ = 0;
  rounds_ = 0;

  for (int v : support) {
    g_->check_vertex(v);
    observe(v);
    for (int u : g_->neighbors(v)) observe(u);
  }

  std::size_t qi = 0;
  while (true) {
    // settle neighbor counters for everything newly observed
    while (qi < queue_.size()) {
      int v = queue_[qi++];
      for (int u : g_->neighbors(v))
        if (--unobserved_deg_[u] == 1 && observed_[u]) forcers_.push_back(u);
      if (unobserved_deg_[v] == 1) forcers_.push_back(v);
    }
    int forcer = -1;
    while (!forcers_.empty()) {
      int c = forcers_.back();
      forcers_.pop_back();
      if (observed_[c] && unobserved_deg_[c] == 1) {
        forcer = c;
        break;
      }
    }
    if (forcer < 0) break;
    for (int u : g_->neighbors(forcer))
      if (!observed_[u]) {
        observe(u);
        ++rounds_;
        break;
      }
  }
}

std::vector<int> ObservationEngine::observed_vertices() const {
  std::vector<int> out;
  out.reserve(count_);
  for (int v = 0; v < n_; ++v)
    if (observed_[v]) out.push_back(v);
  return out;
}

ObservationResult observed_set(const Graph& g, std::span<const int> support) {
  ObservationEngine engine(g);
  engine.run(support);
  ObservationResult result;
  result.observed = engine.observed_vertices();
  result.fully_observed = engine.fully_observed();
  result.rounds = engine.rounds();
  return result;
}

ObservationResult observed_set(const Graph& g, const Placement& p) {
  p.check_against(g);
  auto support = p.support();
  return observed_set(g, support);
}

bool is_power_dominating(const Graph& g, std::span<const int> support) {
  ObservationEngine engine(g);
  engine.run(support);
  return engine.fully_observed();
}

bool is_power_dominating(const Graph& g, const Placement& p) {
  p.check_against(g);
  auto support = p.support();
  return is_power_dominating(g, support);
}

namespace {

void check_subset_cap(const Graph& g, int cap, const char* op) {
  const int n = g.vertex_count();
  if (n > cap)
    throw ResourceError(std::string(op) + ": graph order " + std::to_string(n) +
                        " exceeds enumeration cap " + std::to_string(cap));
  if (n > 62)
    throw ResourceError(std::string(op) +
                        ": subset enumeration is limited to 62 vertices");
}

std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) out.push_back(v);
  return out;
}

// next subset of the same popcount (Gosper)
std::uint64_t next_combination(std::uint64_t x) {
  std::uint64_t c = x & -x;
  std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

int power_domination_number(const Graph& g, int cap) {
  check_subset_cap(g, cap, "power_domination_number");
  const int n = g.vertex_count();
  if (n == 0) return 0;
  ObservationEngine engine(g);
  std::vector<int> verts;
  for (int k = 1; k <= n; ++k) {
    std::uint64_t mask = (k == 64) ? ~0ull : ((1ull << k) - 1);
    std::uint64_t limit = 1ull << n;
    while (mask < limit) {
      verts = mask_to_vertices(mask);
      engine.run(verts);
      if (engine.fully_observed()) return k;
      mask = next_combination(mask);
    }
  }
  return n;  // unreachable: V(G) always observes itself
}

int failed_power_domination_number(const Graph& g, int cap) {
  check_subset_cap(g, cap, "failed_power_domination_number");
  const int n = g.vertex_count();
  if (n == 0) throw ParameterError("empty graph");
  ObservationEngine engine(g);
  std::vector<int> verts;
  // failing sets are downward closed, so scan sizes descending
  for (int k = n - 1; k >= 1; --k) {
    std::uint64_t mask = (1ull << k) - 1;
    std::uint64_t limit = 1ull << n;
    while (mask < limit) {
      verts = mask_to_vertices(mask);
      engine.run(verts);
      if (!engine.fully_observed()) return k;
      mask = next_combination(mask);
    }
  }
  return 0;  // only the empty set fails
}

std::vector<BigInt> power_domination_polynomial(const Graph& g, int cap) {
  check_subset_cap(g, cap, "power_domination_polynomial");
  const int n = g.vertex_count();
  std::vector<BigInt> counts(n + 1, BigInt(0));
  ObservationEngine engine(g);
  std::vector<int> verts;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    verts = mask_to_vertices(mask);
    engine.run(verts);
    if (engine.fully_observed()) counts[verts.size()] += 1;
  }
  return counts;
}

bool is_local_cover(const Graph& g, std::span<const int> support) {
  if (support.empty()) throw ParameterError("local cover requires a nonempty set");
  ObservationEngine engine(g);
  engine.run(support);
  std::vector<int> target = engine.observed_vertices();
  std::vector<char> covered(g.vertex_count(), 0);
  for (int v : support) {
    int single[1] = {v};
    engine.run(single);
    for (int x : engine.observed_vertices()) covered[x] = 1;
  }
  return std::all_of(target.begin(), target.end(),
                     [&](int x) { return covered[x] != 0; });
}

bool is_local_cover(const Graph& g, const Placement& p) {
  p.check_against(g);
  auto support = p.support();
  return is_local_cover(g, support);
}

}  // namespace fpd
