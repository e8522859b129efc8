#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "posetsys/errors.hpp"
#include "posetsys/poset.hpp"
#include "support.hpp"

namespace posetsys {
namespace {

using testing::four_node_poset;
using testing::poset_p;

TEST_CASE("four-node poset: relation, derived sets and Hasse diagram") {
  const Poset P = four_node_poset();
  CHECK(P.geq(1, 4));
  CHECK(P.geq(3, 4));
  CHECK_FALSE(P.geq(4, 1));
  CHECK_FALSE(P.comparable(1, 3));
  CHECK(down(P, 1) == NodeSet{1, 2, 4});
  CHECK(strict_down(P, 1) == NodeSet{2, 4});
  CHECK(up(P, 4) == NodeSet{1, 2, 3, 4});
  CHECK(strict_up(P, 2) == NodeSet{1, 3});
  CHECK(derived_set(P, {1, 3}, SetKind::down) == NodeSet{1, 2, 3, 4});
  CHECK(derived_set(P, {2, 4}, SetKind::strict_up) == NodeSet{1, 3});
  CHECK(derived_set(P, {}, SetKind::up).empty());
  CHECK(hasse_edges(P) == std::vector<Edge>{{1, 2}, {2, 4}, {3, 2}});
}

TEST_CASE("Hasse diagram drops implied edges") {
  const Poset P = build_poset(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(hasse_edges(P) == std::vector<Edge>{{1, 2}, {2, 3}});
  CHECK(build_poset(3, hasse_edges(P)) == P);
}

TEST_CASE("cycles are rejected with a witness") {
  CHECK_THROWS_AS(build_poset(3, {{1, 2}, {2, 3}, {3, 1}}), CycleError);
  try {
    build_poset(3, {{1, 2}, {2, 3}, {3, 1}});
  } catch (const CycleError& e) {
    CHECK(std::string(e.what()).find("1 -> 2 -> 3 -> 1") != std::string::npos);
  }
  CHECK_THROWS_AS(build_poset(2, {{1, 3}}), IndexOutOfRange);
  CHECK_NOTHROW(build_poset(2, {{1, 1}}));
}

TEST_CASE("ultra transitivity of the example posets") {
  CHECK(ultra_transitivity(poset_p(1)).is_in_ultra);
  CHECK(ultra_transitivity(poset_p(2)).is_in_ultra);
  CHECK_FALSE(ultra_transitivity(poset_p(1)).is_out_ultra);
  CHECK(ultra_transitivity(poset_p(3)).is_out_ultra);
  CHECK_FALSE(ultra_transitivity(poset_p(3)).is_in_ultra);
  CHECK(ultra_transitivity(poset_p(4)).is_out_ultra);
  CHECK_FALSE(ultra_transitivity(poset_p(5)).is_in_ultra);
  CHECK_FALSE(ultra_transitivity(poset_p(5)).is_out_ultra);
  const UltraTransitivity chain = ultra_transitivity(poset_p(6));
  CHECK(chain.is_in_ultra);
  CHECK(chain.is_out_ultra);
  CHECK(dual_poset(poset_p(1)) == poset_p(3));
}

TEST_CASE("level sets of the four-node poset") {
  // |↑1| = 1, |↑2| = 3, |↑3| = 1, |↑4| = 4.
  const LevelSets ls = level_sets(four_node_poset());
  REQUIRE(ls.L.size() == 4);
  CHECK(ls.L[0] == NodeSet{1, 3});
  CHECK(ls.L[1] == NodeSet{1, 3});
  CHECK(ls.L[2] == NodeSet{1, 2, 3});
  CHECK(ls.L[3] == NodeSet{1, 2, 3, 4});
  CHECK(ls.ring[0].empty());
  CHECK(ls.ring[1] == NodeSet{2});
  CHECK(ls.ring[2] == NodeSet{4});
  CHECK(ls.ring[3].empty());
}

TEST_CASE("relabel of P3 is a linear extension") {
  const Poset P3 = poset_p(3);
  const std::vector<int> pi = block_triangular_relabel(P3);
  CHECK(pi == std::vector<int>{3, 1, 2});
  // The other linear extension (3, 2, 1) gives the same relabelled order here.
  CHECK(relabel(P3, pi) == relabel(P3, {3, 2, 1}));
  CHECK(relabel(P3, pi) == build_poset(3, {{1, 3}, {2, 3}}));
}

TEST_CASE("random posets agree with a brute-force closure") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    std::uniform_int_distribution<int> size(0, 7);
    const int p = size(rng);
    const Poset P = testing::random_poset(p, 0.35, rng);
    const std::vector<Edge> hasse = hasse_edges(P);
    const auto closure = testing::oracle_closure(p, hasse);
    for (int j = 1; j <= p; ++j) {
      for (int i = 1; i <= p; ++i) CHECK(P.geq(j, i) == static_cast<bool>(closure[j][i]));
    }
    // Partial order axioms.
    for (int a = 1; a <= p; ++a) {
      CHECK(P.geq(a, a));
      for (int b = 1; b <= p; ++b) {
        if (a != b) CHECK_FALSE((P.geq(a, b) && P.geq(b, a)));
        for (int c = 1; c <= p; ++c) {
          if (P.geq(a, b) && P.geq(b, c)) CHECK(P.geq(a, c));
        }
      }
    }
    // Hasse edges are exactly the uncovered strict pairs.
    for (const auto& [j, i] : hasse) {
      for (int k = 1; k <= p; ++k) CHECK_FALSE((P.gt(j, k) && P.gt(k, i)));
    }
    CHECK(dual_poset(dual_poset(P)) == P);
    for (int i = 1; i <= p; ++i) {
      CHECK(up(dual_poset(P), i) == down(P, i));
      CHECK(is_subset(strict_down(P, i), down(P, i)));
      CHECK(down(P, i).count(i) == 1);
    }
    const UltraTransitivity u = ultra_transitivity(P);
    const UltraTransitivity d = ultra_transitivity(dual_poset(P));
    CHECK(u.is_in_ultra == d.is_out_ultra);
    CHECK(u.is_out_ultra == d.is_in_ultra);
  }
}

TEST_CASE("relabelling makes every random poset block triangular") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 300; ++t) {
    std::uniform_int_distribution<int> size(1, 7);
    const int p = size(rng);
    const Poset P = testing::random_poset(p, 0.4, rng);
    const std::vector<int> pi = block_triangular_relabel(P);
    std::vector<int> sorted = pi;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> labels(p);
    std::iota(labels.begin(), labels.end(), 1);
    CHECK(sorted == labels);
    const Poset Q = relabel(P, pi);
    for (int j = 1; j <= p; ++j) {
      for (int i = 1; i <= p; ++i) {
        CHECK(Q.geq(pi[j - 1], pi[i - 1]) == P.geq(j, i));
        if (Q.gt(j, i)) CHECK(j < i);
      }
    }
  }
}

TEST_CASE("level sets are nested and end with the whole poset") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<int> size(1, 7);
    const int p = size(rng);
    const Poset P = testing::random_poset(p, 0.4, rng);
    const LevelSets ls = level_sets(P);
    CHECK(ls.L.back() == P.all());
    for (int k = 1; k < p; ++k) {
      CHECK(is_subset(ls.L[k - 1], ls.L[k]));
      CHECK(ls.ring[k - 1] == set_difference(ls.L[k], ls.L[k - 1]));
    }
    for (int k = 1; k <= p; ++k) {
      for (int j : ls.L[k - 1]) CHECK(static_cast<int>(up(P, j).size()) <= k);
      // Level sets are closed upwards.
      CHECK(derived_set(P, ls.L[k - 1], SetKind::up) == ls.L[k - 1]);
    }
  }
}

}  // namespace
}  // namespace posetsys
