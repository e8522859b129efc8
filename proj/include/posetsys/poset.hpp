#pragma once

#include <set>
#include <utility>
#include <vector>

namespace posetsys {

// Nodes are labelled 1..p throughout the public interface.
using NodeSet = std::set<int>;
using Edge = std::pair<int, int>;  // (j, i) means j ⪰ i

enum class SetKind { down, up, strict_down, strict_up };

class Poset {
 public:
  Poset() = default;

  int size() const { return p_; }
  // j ⪰ i: node j can influence node i.
  bool geq(int j, int i) const { return rel_[index(j, i)] != 0; }
  bool gt(int j, int i) const { return j != i && geq(j, i); }
  bool comparable(int i, int j) const { return geq(i, j) || geq(j, i); }
  NodeSet all() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.p_ == b.p_ && a.rel_ == b.rel_;
  }

 private:
  friend Poset build_poset(int p, const std::vector<Edge>& edges);
  friend Poset dual_poset(const Poset& poset);

  std::size_t index(int j, int i) const {
    return static_cast<std::size_t>(j - 1) * p_ + (i - 1);
  }

  int p_ = 0;
  std::vector<char> rel_;
};

// Reflexive-transitive closure of the edges. Throws CycleError (with a
// witness cycle in the message) if the closure is not anti-symmetric, and
// IndexOutOfRange for labels outside 1..p.
Poset build_poset(int p, const std::vector<Edge>& edges);

NodeSet derived_set(const Poset& poset, const NodeSet& r, SetKind kind);
NodeSet down(const Poset& poset, int i);
NodeSet up(const Poset& poset, int i);
NodeSet strict_down(const Poset& poset, int i);
NodeSet strict_up(const Poset& poset, int i);

Poset dual_poset(const Poset& poset);

// Transitive reduction, sorted.
std::vector<Edge> hasse_edges(const Poset& poset);

struct UltraTransitivity {
  bool is_in_ultra = false;
  bool is_out_ultra = false;
};
UltraTransitivity ultra_transitivity(const Poset& poset);

struct LevelSets {
  std::vector<NodeSet> L;     // L[k-1] = {j : |↑j| ≤ k}
  std::vector<NodeSet> ring;  // ring[k-1] = L_{k+1} \ L_k, last one empty
};
LevelSets level_sets(const Poset& poset);

// pi[j-1] is the new label of node j; a linear extension with larger
// elements first and ties broken by ascending original label.
std::vector<int> block_triangular_relabel(const Poset& poset);

// Relation transported along a relabelling: new ⪰ holds for (pi(j), pi(i))
// iff j ⪰ i.
Poset relabel(const Poset& poset, const std::vector<int>& pi);

NodeSet all_nodes(int p);
NodeSet set_union(const NodeSet& a, const NodeSet& b);
NodeSet set_intersection(const NodeSet& a, const NodeSet& b);
NodeSet set_difference(const NodeSet& a, const NodeSet& b);
bool is_subset(const NodeSet& a, const NodeSet& b);

}  // namespace posetsys
