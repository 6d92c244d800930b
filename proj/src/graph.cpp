#include "fpd/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "fpd/errors.hpp"

namespace fpd {

Graph::Graph(int n) : n_(n), adj_(n) {
  if (n < 0) throw ParameterError("negative vertex count");
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw ParameterError("vertex " + std::to_string(v) + " out of range [0, " +
                         std::to_string(n_) + ")");
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
  auto insert_sorted = [](std::vector<int>& list, int x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it != list.end() && *it == x) return false;
    list.insert(it, x);
    return true;
  };
  if (insert_sorted(adj_[u], v)) {
    insert_sorted(adj_[v], u);
    ++edges_;
  }
}

const std::string& Graph::label(int v) const {
  check_vertex(v);
  static const std::string empty;
  return labels_.empty() ? empty : labels_[v];
}

void Graph::set_label(int v, std::string text) {
  check_vertex(v);
  if (labels_.empty()) labels_.resize(n_);
  labels_[v] = std::move(text);
}

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  long n = -1, m = -1;
  long edges_seen = 0;
  Graph g;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    if (blank(line)) continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 0 || m < 0)
        throw ParseError("expected header 'n m'", line_no);
      std::string extra;
      if (ls >> extra) throw ParseError("trailing content after header", line_no);
      g = Graph(static_cast<int>(n));
      continue;
    }
    long u, v;
    if (!(ls >> u >> v)) throw ParseError("expected edge 'u v'", line_no);
    std::string extra;
    if (ls >> extra) throw ParseError("trailing content after edge", line_no);
    if (++edges_seen > m) throw ParseError("more edges than declared", line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("vertex index out of range [0, " + std::to_string(n) + ")",
                       line_no);
    if (u == v) throw ParseError("self-loop", line_no);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw ParseError("empty input; expected header 'n m'");
  if (edges_seen < m)
    throw ParseError("declared " + std::to_string(m) + " edges but found " +
                     std::to_string(edges_seen));
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) out << u << " " << v << "\n";
  return out.str();
}

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

int g6_value(char c, const char* what) {
  int v = static_cast<unsigned char>(c);
  if (v < kG6Lo || v > kG6Hi)
    throw ParseError(std::string("invalid graph6 character in ") + what);
  return v - kG6Lo;
}

}  // namespace

Graph parse_graph6(const std::string& line) {
  std::string s = line;
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw ParseError("empty graph6 string");

  std::size_t pos = 0;
  long long n;
  if (s[0] != '~') {
    n = g6_value(s[0], "order");
    pos = 1;
  } else if (s.size() >= 2 && s[1] != '~') {
    if (s.size() < 4) throw ParseError("truncated graph6 order");
    n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | g6_value(s[i], "order");
    pos = 4;
  } else {
    if (s.size() < 8) throw ParseError("truncated graph6 order");
    n = 0;
    for (int i = 2; i <= 7; ++i) n = (n << 6) | g6_value(s[i], "order");
    pos = 8;
  }
  if (n > 1'000'000) throw ResourceError("graph6 order too large");

  long long bits = n * (n - 1) / 2;
  long long need = (bits + 5) / 6;
  if (static_cast<long long>(s.size()) - static_cast<long long>(pos) < need)
    throw ParseError("truncated graph6 bit vector");
  if (static_cast<long long>(s.size()) - static_cast<long long>(pos) > need)
    throw ParseError("trailing content after graph6 bit vector");

  Graph g(static_cast<int>(n));
  int cur = 0, have = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (have == 0) {
        cur = g6_value(s[pos++], "bit vector");
        have = 6;
      }
      if (cur & (1 << (have - 1))) g.add_edge(i, j);
      --have;
    }
  }
  // canonical encodings pad with zero bits
  if (have > 0 && (cur & ((1 << have) - 1)) != 0)
    throw ParseError("nonzero padding in graph6 bit vector");
  return g;
}

std::string encode_graph6(const Graph& g) {
  const long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Lo));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kG6Lo));
  } else {
    out.push_back('~');
    out.push_back('~');
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kG6Lo));
  }
  int cur = 0, have = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      cur = (cur << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++have == 6) {
        out.push_back(static_cast<char>(cur + kG6Lo));
        cur = 0;
        have = 0;
      }
    }
  }
  if (have > 0) out.push_back(static_cast<char>((cur << (6 - have)) + kG6Lo));
  return out;
}

Graph parse_graph_auto(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string stripped = strip_comment(line);
    if (blank(stripped)) continue;
    std::istringstream probe(stripped);
    long a, b;
    std::string extra;
    if (probe >> a >> b && !(probe >> extra)) return parse_edge_list(text);
    return parse_graph6(stripped);
  }
  throw ParseError("empty graph input");
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> components;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> comp;
    stack.push_back(start);
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() == 0 || connected_components(g).size() == 1;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.vertex_count() + b.vertex_count());
  for (int u = 0; u < a.vertex_count(); ++u)
    for (int v : a.neighbors(u))
      if (u < v) g.add_edge(u, v);
  const int off = a.vertex_count();
  for (int u = 0; u < b.vertex_count(); ++u)
    for (int v : b.neighbors(u))
      if (u < v) g.add_edge(u + off, v + off);
  return g;
}

}  // namespace fpd
