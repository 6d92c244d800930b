#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fpd/graph.hpp"

namespace fpd {

enum class GraphFamily {
  path,
  cycle,
  complete,
  star,
  wheel,
  complete_multipartite,
  cycle_complement,
};

GraphFamily family_from_name(const std::string& name);
std::string family_name(GraphFamily family);

// Textbook families. Conventions: star(n) has its universal vertex at
// index 0; wheel(n) has the hub at index 0; multipartite parts occupy
// consecutive index ranges; cycle_complement(n) is the complement of
// C_{n+2} on n+2 vertices.
Graph gen_named(GraphFamily family, std::span<const int> params);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int n);
Graph wheel_graph(int n);
Graph complete_multipartite_graph(std::span<const int> parts);
Graph cycle_complement_graph(int n);

// Disjoint union of g1 and g2 joined by a path of m new internal vertices
// between x1 (in g1) and x2 (in g2); m = 0 joins them by a direct edge.
// Layout: g1 at [0, |g1|), g2 at [|g1|, |g1|+|g2|), path vertices last,
// ordered from the x1 end to the x2 end.
Graph gen_generalized_barbell(const Graph& g1, int x1, const Graph& g2, int x2,
                              int m);

struct LinearConstructResult {
  Graph graph;
  std::vector<int> apexes;  // a_1..a_k
};

// Complete multipartite core K_{r_1..r_k} (k >= 2, r_i >= 2) with one apex
// a_i joined to all of part i, two pendant leaves on each apex, and
// optional edge subdivisions. Subdivision keys are (apex index i, slot):
// slots 0..r_i-1 are the edges a_i--(j-th vertex of part i), slot r_i and
// r_i+1 are the two leaf edges; values are subdivision counts >= 0.
// Layout: parts first, then apexes, then leaf pairs, then subdivision
// vertices.
LinearConstructResult gen_linear_construct(
    std::span<const int> parts,
    const std::map<std::pair<int, int>, int>& subdivisions = {});

struct CrossingFamilyResult {
  Graph graph;
  std::vector<int> pds;     // {s0, s1}: observes the whole graph
  std::vector<int> failed;  // {f0, f1}: observes 6+b vertices
};

// A graph on 10+a+b vertices built so that, certified by propagation at
// construction time:
//   |Obs({s0,s1})| = 10+a+b,
//   |Obs({s0})| + |Obs({s1})| = 12+a,
//   |Obs({f0,f1})| = 6+b = |Obs({f0})| + |Obs({f1})|,
//   Obs({f0}) and Obs({f1}) partition Obs({f0,f1}).
// Structure: a 10-vertex core (two PMU sites s0, s1 with private leaf and
// pendant-path regions, a junction layer J/k/m1/m2 reachable from both,
// and two sites f0, f1 behind it) plus a pendant path of a vertices on s1
// and a pendant path of b vertices on f1.
CrossingFamilyResult gen_crossing_family(int a, int b);

// The 7-vertex example graph: hub edge between vertices 3 and 4 (labels
// "4"/"5"), a triangle through vertex 0, leaf pairs {1,2} and {5,6}.
// Labels record the 1-based names "1".."7".
Graph example_graph();

}  // namespace fpd
