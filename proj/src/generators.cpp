#include "fpd/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "fpd/errors.hpp"
#include "fpd/propagation.hpp"

namespace fpd {

GraphFamily family_from_name(const std::string& name) {
  if (name == "path") return GraphFamily::path;
  if (name == "cycle") return GraphFamily::cycle;
  if (name == "complete") return GraphFamily::complete;
  if (name == "star") return GraphFamily::star;
  if (name == "wheel") return GraphFamily::wheel;
  if (name == "complete_multipartite" || name == "multipartite")
    return GraphFamily::complete_multipartite;
  if (name == "cycle_complement") return GraphFamily::cycle_complement;
  throw ParameterError("unknown graph family '" + name + "'");
}

std::string family_name(GraphFamily family) {
  switch (family) {
    case GraphFamily::path: return "path";
    case GraphFamily::cycle: return "cycle";
    case GraphFamily::complete: return "complete";
    case GraphFamily::star: return "star";
    case GraphFamily::wheel: return "wheel";
    case GraphFamily::complete_multipartite: return "complete_multipartite";
    case GraphFamily::cycle_complement: return "cycle_complement";
  }
  throw std::logic_error("unhandled family");
}

Graph path_graph(int n) {
  if (n < 1) throw ParameterError("path requires n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw ParameterError("cycle requires n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  if (n < 1) throw ParameterError("complete graph requires n >= 1");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph star_graph(int n) {
  if (n < 2) throw ParameterError("star requires n >= 2");
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

Graph wheel_graph(int n) {
  if (n < 4) throw ParameterError("wheel requires n >= 4");
  Graph g(n);
  for (int i = 1; i < n; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i == n - 1 ? 1 : i + 1);
  }
  return g;
}

Graph complete_multipartite_graph(std::span<const int> parts) {
  if (parts.empty()) throw ParameterError("multipartite requires >= 1 part");
  int total = 0;
  for (int r : parts) {
    if (r < 1) throw ParameterError("multipartite part sizes must be >= 1");
    total += r;
  }
  Graph g(total);
  int a_begin = 0;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    int b_begin = a_begin + parts[a];
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      for (int u = a_begin; u < a_begin + parts[a]; ++u)
        for (int v = b_begin; v < b_begin + parts[b]; ++v) g.add_edge(u, v);
      b_begin += parts[b];
    }
    a_begin += parts[a];
  }
  return g;
}

Graph cycle_complement_graph(int n) {
  if (n < 3) throw ParameterError("cycle_complement requires n >= 3");
  const int order = n + 2;
  Graph g(order);
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j) {
      bool cycle_edge = (j == i + 1) || (i == 0 && j == order - 1);
      if (!cycle_edge) g.add_edge(i, j);
    }
  return g;
}

Graph gen_named(GraphFamily family, std::span<const int> params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw ParameterError(family_name(family) + " expects " + std::to_string(k) +
                           " parameter(s), got " + std::to_string(params.size()));
  };
  switch (family) {
    case GraphFamily::path: need(1); return path_graph(params[0]);
    case GraphFamily::cycle: need(1); return cycle_graph(params[0]);
    case GraphFamily::complete: need(1); return complete_graph(params[0]);
    case GraphFamily::star: need(1); return star_graph(params[0]);
    case GraphFamily::wheel: need(1); return wheel_graph(params[0]);
    case GraphFamily::complete_multipartite:
      return complete_multipartite_graph(params);
    case GraphFamily::cycle_complement: need(1); return cycle_complement_graph(params[0]);
  }
  throw std::logic_error("unhandled family");
}

Graph gen_generalized_barbell(const Graph& g1, int x1, const Graph& g2, int x2,
                              int m) {
  g1.check_vertex(x1);
  g2.check_vertex(x2);
  if (m < 0) throw ParameterError("barbell requires m >= 0");
  Graph g = disjoint_union(g1, g2);
  const int off2 = g1.vertex_count();
  const int path_begin = off2 + g2.vertex_count();
  Graph out(path_begin + m);
  for (int u = 0; u < path_begin; ++u)
    for (int v : g.neighbors(u))
      if (u < v) out.add_edge(u, v);
  if (m == 0) {
    out.add_edge(x1, off2 + x2);
  } else {
    out.add_edge(x1, path_begin);
    for (int i = 0; i + 1 < m; ++i) out.add_edge(path_begin + i, path_begin + i + 1);
    out.add_edge(path_begin + m - 1, off2 + x2);
  }
  return out;
}

namespace {

// Replaces the edge u--v with a path of `count` new vertices appended at
// the end of the graph. Assumes u--v is present.
void subdivide_edge(std::vector<std::pair<int, int>>& edges, int& next_vertex,
                    int u, int v, int count) {
  auto it = std::find_if(edges.begin(), edges.end(), [&](const auto& e) {
    return (e.first == u && e.second == v) || (e.first == v && e.second == u);
  });
  if (it == edges.end()) throw std::logic_error("subdivision of a missing edge");
  edges.erase(it);
  int prev = u;
  for (int i = 0; i < count; ++i) {
    edges.emplace_back(prev, next_vertex);
    prev = next_vertex++;
  }
  edges.emplace_back(prev, v);
}

}  // namespace

LinearConstructResult gen_linear_construct(
    std::span<const int> parts, const std::map<std::pair<int, int>, int>& subdivisions) {
  const int k = static_cast<int>(parts.size());
  if (k < 2) throw ParameterError("linear construction requires >= 2 parts");
  for (int r : parts)
    if (r < 2) throw ParameterError("linear construction requires part sizes >= 2");

  int total_parts = 0;
  for (int r : parts) total_parts += r;
  std::vector<int> part_begin(k);
  int acc = 0;
  for (int i = 0; i < k; ++i) {
    part_begin[i] = acc;
    acc += parts[i];
  }
  const int apex_begin = total_parts;
  const int leaf_begin = apex_begin + k;
  int next_vertex = leaf_begin + 2 * k;

  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int u = part_begin[a]; u < part_begin[a] + parts[a]; ++u)
        for (int v = part_begin[b]; v < part_begin[b] + parts[b]; ++v)
          edges.emplace_back(u, v);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < parts[i]; ++j) edges.emplace_back(apex_begin + i, part_begin[i] + j);
    edges.emplace_back(apex_begin + i, leaf_begin + 2 * i);
    edges.emplace_back(apex_begin + i, leaf_begin + 2 * i + 1);
  }

  for (const auto& [key, count] : subdivisions) {
    auto [i, slot] = key;
    if (i < 0 || i >= k) throw ParameterError("subdivision apex index out of range");
    if (count < 0) throw ParameterError("negative subdivision count");
    if (count == 0) continue;
    int other;
    if (slot >= 0 && slot < parts[i])
      other = part_begin[i] + slot;
    else if (slot == parts[i])
      other = leaf_begin + 2 * i;
    else if (slot == parts[i] + 1)
      other = leaf_begin + 2 * i + 1;
    else
      throw ParameterError("subdivision slot out of range");
    subdivide_edge(edges, next_vertex, apex_begin + i, other, count);
  }

  LinearConstructResult result;
  result.graph = Graph(next_vertex);
  for (auto [u, v] : edges) result.graph.add_edge(u, v);
  for (int i = 0; i < k; ++i) result.apexes.push_back(apex_begin + i);
  return result;
}

CrossingFamilyResult gen_crossing_family(int a, int b) {
  if (a < 1) throw ParameterError("crossing family requires a >= 1");
  if (b < 3) throw ParameterError("crossing family requires b >= 3");

  // fixed core: s0 0, s1 1, leaves 2 3, junction 4, gates 5 6 7, f0 8, f1 9
  const int s0 = 0, s1 = 1, l1 = 2, l2 = 3, jv = 4, kv = 5, m1 = 6, m2 = 7,
            f0 = 8, f1 = 9;
  const int x_begin = 10;        // pendant path on s1, a vertices
  const int p_begin = 10 + a;    // pendant path on f1, b vertices
  Graph g(10 + a + b);

  for (int v : {l1, l2, jv, kv, m1, m2}) g.add_edge(s0, v);
  for (int v : {jv, kv, m1, m2}) g.add_edge(s1, v);
  g.add_edge(s1, x_begin);
  for (int i = 0; i + 1 < a; ++i) g.add_edge(x_begin + i, x_begin + i + 1);
  g.add_edge(jv, kv);
  g.add_edge(jv, f0);
  g.add_edge(kv, m2);
  g.add_edge(kv, f1);
  g.add_edge(m1, m2);
  g.add_edge(m1, f1);
  g.add_edge(m2, f0);
  g.add_edge(f1, p_begin);
  for (int i = 0; i + 1 < b; ++i) g.add_edge(p_begin + i, p_begin + i + 1);

  CrossingFamilyResult result;
  result.graph = std::move(g);
  result.pds = {s0, s1};
  result.failed = {f0, f1};

  // certify the construction's observation counts
  ObservationEngine engine(result.graph);
  auto count_of = [&](std::vector<int> support) {
    engine.run(support);
    return engine.observed_count();
  };
  const int n = 10 + a + b;
  bool ok = count_of({s0, s1}) == n;
  ok = ok && count_of({s0}) + count_of({s1}) == 12 + a;
  engine.run(std::vector<int>{f0});
  auto obs_f0 = engine.observed_vertices();
  engine.run(std::vector<int>{f1});
  auto obs_f1 = engine.observed_vertices();
  engine.run(std::vector<int>{f0, f1});
  auto obs_pair = engine.observed_vertices();
  ok = ok && static_cast<int>(obs_pair.size()) == 6 + b;
  ok = ok && static_cast<int>(obs_f0.size() + obs_f1.size()) == 6 + b;
  std::vector<int> joined = obs_f0;
  joined.insert(joined.end(), obs_f1.begin(), obs_f1.end());
  std::sort(joined.begin(), joined.end());
  ok = ok && joined == obs_pair;
  if (!ok) throw std::logic_error("crossing family certification failed");
  return result;
}

Graph example_graph() {
  Graph g(7);
  g.add_edge(0, 3);
  g.add_edge(0, 4);
  g.add_edge(3, 4);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  g.add_edge(4, 5);
  g.add_edge(4, 6);
  for (int v = 0; v < 7; ++v) g.set_label(v, std::to_string(v + 1));
  return g;
}

}  // namespace fpd
