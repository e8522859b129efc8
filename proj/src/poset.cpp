#include "posetsys/poset.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <string>

#include "posetsys/errors.hpp"

namespace posetsys {
namespace {

// Shortest edge path from `from` to `to`, both inclusive.
std::vector<int> edge_path(int p, const std::vector<Edge>& edges, int from, int to) {
  std::vector<int> parent(p + 1, 0);
  std::deque<int> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (const auto& [j, i] : edges) {
      if (j == u && parent[i] == 0) {
        parent[i] = u;
        queue.push_back(i);
      }
    }
  }
  std::vector<int> path{to};
  for (int v = to; v != from;) {
    v = parent[v];
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

NodeSet Poset::all() const { return all_nodes(p_); }

NodeSet all_nodes(int p) {
  NodeSet s;
  for (int i = 1; i <= p; ++i) s.insert(i);
  return s;
}

Poset build_poset(int p, const std::vector<Edge>& edges) {
  if (p < 0) throw IndexOutOfRange("negative poset size");
  for (const auto& [j, i] : edges) {
    if (j < 1 || j > p || i < 1 || i > p) {
      throw IndexOutOfRange("edge (" + std::to_string(j) + "," + std::to_string(i) +
                            ") outside 1.." + std::to_string(p));
    }
  }
  Poset poset;
  poset.p_ = p;
  poset.rel_.assign(static_cast<std::size_t>(p) * p, 0);
  for (int i = 1; i <= p; ++i) poset.rel_[poset.index(i, i)] = 1;
  for (const auto& [j, i] : edges) poset.rel_[poset.index(j, i)] = 1;
  for (int k = 1; k <= p; ++k) {
    for (int j = 1; j <= p; ++j) {
      if (!poset.rel_[poset.index(j, k)]) continue;
      for (int i = 1; i <= p; ++i) {
        if (poset.rel_[poset.index(k, i)]) poset.rel_[poset.index(j, i)] = 1;
      }
    }
  }
  for (int j = 1; j <= p; ++j) {
    for (int i = j + 1; i <= p; ++i) {
      if (poset.geq(j, i) && poset.geq(i, j)) {
        std::vector<int> cycle = edge_path(p, edges, j, i);
        const std::vector<int> back = edge_path(p, edges, i, j);
        cycle.insert(cycle.end(), back.begin() + 1, back.end());
        std::string witness;
        for (int v : cycle) witness += (witness.empty() ? "" : " -> ") + std::to_string(v);
        throw CycleError("relation is not anti-symmetric; cycle " + witness);
      }
    }
  }
  return poset;
}

NodeSet derived_set(const Poset& poset, const NodeSet& r, SetKind kind) {
  NodeSet out;
  for (int v = 1; v <= poset.size(); ++v) {
    for (int s : r) {
      const bool hit = (kind == SetKind::down || kind == SetKind::strict_down)
                           ? poset.geq(s, v)
                           : poset.geq(v, s);
      if (hit) {
        out.insert(v);
        break;
      }
    }
  }
  if (kind == SetKind::strict_down || kind == SetKind::strict_up) {
    for (int s : r) out.erase(s);
  }
  return out;
}

NodeSet down(const Poset& poset, int i) { return derived_set(poset, {i}, SetKind::down); }
NodeSet up(const Poset& poset, int i) { return derived_set(poset, {i}, SetKind::up); }
NodeSet strict_down(const Poset& poset, int i) {
  return derived_set(poset, {i}, SetKind::strict_down);
}
NodeSet strict_up(const Poset& poset, int i) {
  return derived_set(poset, {i}, SetKind::strict_up);
}

Poset dual_poset(const Poset& poset) {
  Poset d = poset;
  for (int j = 1; j <= poset.size(); ++j) {
    for (int i = 1; i <= poset.size(); ++i) d.rel_[d.index(j, i)] = poset.geq(i, j);
  }
  return d;
}

std::vector<Edge> hasse_edges(const Poset& poset) {
  std::vector<Edge> out;
  const int p = poset.size();
  for (int i = 1; i <= p; ++i) {
    for (int j = 1; j <= p; ++j) {
      if (!poset.gt(i, j)) continue;
      bool covered = true;
      for (int k = 1; k <= p && covered; ++k) {
        if (poset.gt(i, k) && poset.gt(k, j)) covered = false;
      }
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

UltraTransitivity ultra_transitivity(const Poset& poset) {
  UltraTransitivity u{true, true};
  const int p = poset.size();
  for (int a = 1; a <= p; ++a) {
    for (int b = 1; b <= p; ++b) {
      for (int c = 1; c <= p; ++c) {
        if (poset.geq(a, c) && poset.geq(b, c) && !poset.comparable(a, b)) {
          u.is_in_ultra = false;
        }
        if (poset.geq(a, b) && poset.geq(a, c) && !poset.comparable(b, c)) {
          u.is_out_ultra = false;
        }
      }
    }
  }
  return u;
}

LevelSets level_sets(const Poset& poset) {
  const int p = poset.size();
  LevelSets ls;
  for (int k = 1; k <= p; ++k) {
    NodeSet lk;
    for (int j = 1; j <= p; ++j) {
      if (static_cast<int>(up(poset, j).size()) <= k) lk.insert(j);
    }
    ls.L.push_back(std::move(lk));
  }
  for (int k = 1; k <= p; ++k) {
    ls.ring.push_back(k < p ? set_difference(ls.L[k], ls.L[k - 1]) : NodeSet{});
  }
  return ls;
}

std::vector<int> block_triangular_relabel(const Poset& poset) {
  const int p = poset.size();
  std::vector<int> pi(p, 0);
  NodeSet remaining = poset.all();
  for (int next = 1; next <= p; ++next) {
    for (int j : remaining) {
      bool maximal = true;
      for (int k : remaining) {
        if (poset.gt(k, j)) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        pi[j - 1] = next;
        remaining.erase(j);
        break;
      }
    }
  }
  return pi;
}

Poset relabel(const Poset& poset, const std::vector<int>& pi) {
  std::vector<Edge> edges;
  for (int j = 1; j <= poset.size(); ++j) {
    for (int i = 1; i <= poset.size(); ++i) {
      if (poset.gt(j, i)) edges.emplace_back(pi[j - 1], pi[i - 1]);
    }
  }
  return build_poset(poset.size(), edges);
}

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
  NodeSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

NodeSet set_intersection(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

NodeSet set_difference(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

bool is_subset(const NodeSet& a, const NodeSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace posetsys
