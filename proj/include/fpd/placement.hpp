#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

namespace fpd {

class Graph;

// A PMU placement: a multiset of vertices, stored as vertex -> multiplicity
// with every multiplicity >= 1. A placement whose multiplicities are all 1
// is an ordinary vertex set.
class Placement {
 public:
  Placement() = default;
  static Placement from_vertices(std::span<const int> vertices);

  // Token format "v[*m],v[*m],..." e.g. "4,5" or "0*2,3".
  static Placement parse(const std::string& text);

  void add(int v, int count = 1);

  bool empty() const { return entries_.empty(); }
  // total PMU count (sum of multiplicities)
  int size() const;
  int distinct_count() const { return static_cast<int>(entries_.size()); }
  bool is_set() const;
  int multiplicity(int v) const;

  const std::map<int, int>& entries() const { return entries_; }
  std::vector<int> support() const;

  void check_against(const Graph& g) const;

  std::string to_string() const;

  bool operator==(const Placement& rhs) const { return entries_ == rhs.entries_; }
  bool operator<(const Placement& rhs) const { return entries_ < rhs.entries_; }

 private:
  std::map<int, int> entries_;
};

}  // namespace fpd
