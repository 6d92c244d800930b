#pragma once

#include <span>
#include <string>
#include <vector>

namespace fpd {

// Simple undirected graph on dense vertex indices 0..n-1. Adjacency lists
// are kept sorted and symmetric; self-loops are rejected and duplicate
// edge insertions are no-ops. Instances are treated as immutable once
// built, so they can be shared freely across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const;

  void add_edge(int u, int v);

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(int v) const;
  void set_label(int v, std::string text);

  void check_vertex(int v) const;

 private:
  int n_ = 0;
  int edges_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
};

// Edge-list text format: first non-comment line "n m", then m lines "u v"
// with 0 <= u,v < n and u != v. '#' starts a comment anywhere on a line.
// Duplicate edges are tolerated (set semantics). Errors carry line numbers.
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// graph6 format, bit-exact per the format specification. Supports the
// 1-, 4- and 8-byte order encodings (n up to 2^36-1); requires canonical
// zero padding when decoding.
Graph parse_graph6(const std::string& line);
std::string encode_graph6(const Graph& g);

// Autodetects edge-list vs graph6 content (used by the CLI --graph flag).
Graph parse_graph_auto(const std::string& text);

// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Disjoint union; vertices of b are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace fpd
