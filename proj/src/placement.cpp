#include "fpd/placement.hpp"

#include <sstream>

#include "fpd/errors.hpp"
#include "fpd/graph.hpp"

namespace fpd {

Placement Placement::from_vertices(std::span<const int> vertices) {
  Placement p;
  for (int v : vertices) p.add(v);
  return p;
}

void Placement::add(int v, int count) {
  if (v < 0) throw ParameterError("negative vertex in placement");
  if (count < 1) throw ParameterError("placement multiplicity must be >= 1");
  entries_[v] += count;
}

int Placement::size() const {
  int total = 0;
  for (const auto& [v, m] : entries_) total += m;
  return total;
}

bool Placement::is_set() const {
  for (const auto& [v, m] : entries_)
    if (m != 1) return false;
  return true;
}

int Placement::multiplicity(int v) const {
  auto it = entries_.find(v);
  return it == entries_.end() ? 0 : it->second;
}

std::vector<int> Placement::support() const {
  std::vector<int> out;
  out.reserve(entries_.size());
  for (const auto& [v, m] : entries_) out.push_back(v);
  return out;
}

void Placement::check_against(const Graph& g) const {
  for (const auto& [v, m] : entries_) g.check_vertex(v);
}

Placement Placement::parse(const std::string& text) {
  Placement p;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) throw ParameterError("empty placement token");
    auto star = token.find('*');
    std::string v_str = token.substr(0, star);
    std::string m_str = star == std::string::npos ? "1" : token.substr(star + 1);
    try {
      std::size_t used = 0;
      int v = std::stoi(v_str, &used);
      if (used != v_str.size()) throw std::invalid_argument(v_str);
      int m = std::stoi(m_str, &used);
      if (used != m_str.size()) throw std::invalid_argument(m_str);
      p.add(v, m);
    } catch (const std::logic_error&) {
      throw ParameterError("invalid placement token '" + token + "'");
    }
  }
  if (p.empty()) throw ParameterError("empty placement");
  return p;
}

std::string Placement::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, m] : entries_) {
    if (!first) out << ",";
    first = false;
    out << v;
    if (m > 1) out << "*" << m;
  }
  return out.str();
}

}  // namespace fpd
