#include <random>

#include "doctest.h"
#include "posetsys/errors.hpp"
#include "posetsys/subspace.hpp"
#include "support.hpp"

namespace posetsys {
namespace {

using testing::dense;
using testing::oracle_rank;
using testing::oracle_same_span;
using testing::oracle_span_contains;
using testing::random_subspace;
using testing::span_of;

TEST_CASE("images and kernels of small matrices") {
  CHECK(image(QMatrix::Zero(3, 2)) == Subspace(3));
  CHECK(kernel(QMatrix::Identity(3, 3)) == Subspace(3));
  CHECK(image(dense({{1, 1}, {1, 1}})) == span_of("span{e1+e2}", 2));
  CHECK(kernel(dense({{1, 1}})) == span_of("span{e1-e2}", 2));
  CHECK(Subspace::whole(2).dim() == 2);
}

TEST_CASE("coordinate spans in Q^3") {
  const Subspace U = span_of("span{e1, e2}", 3);
  const Subspace V = span_of("span{e2, e3}", 3);
  CHECK(intersect(U, V) == span_of("span{e2}", 3));
  CHECK(sum(U, V) == Subspace::whole(3));
  CHECK(complement(U) == span_of("span{e3}", 3));
  CHECK(ominus(U, V) == span_of("span{e1}", 3));
  CHECK(contains(U, span_of("span{e1-e2}", 3)));
  CHECK_FALSE(contains(U, V));
  CHECK_THROWS_AS(sum(U, Subspace(2)), AmbientMismatch);
}

TEST_CASE("coordinate projection") {
  const Partition n({2, 2});
  CHECK(coordinate_project(span_of("span{e2+e4}", 4), n, {2}) == span_of("span{e4}", 4));
  const Subspace inside = span_of("span{e3-e4}", 4);
  CHECK(coordinate_project(inside, n, {2}) == inside);
  CHECK(coordinate_subspace(n, {2}) == span_of("span{e3, e4}", 4));
  CHECK(embed(span_of("span{e1+e2}", 2), n, {2}) == span_of("span{e3+e4}", 4));
}

TEST_CASE("span strings round trip") {
  const Subspace u = span_of("span{e1, e4+e8, -1/2e2+e3}", 9);
  CHECK(u.dim() == 3);
  CHECK(parse_span(to_span_string(u), 9) == u);
  CHECK(to_span_string(Subspace(4)) == "{0}");
  CHECK(to_span_string(span_of("span{2e2-4e3}", 3)) == "span{e2-2e3}");
  CHECK_THROWS_AS(parse_span("span{e5}", 4), ParseError);
  CHECK_THROWS_AS(parse_span("span{e1", 4), ParseError);
  CHECK_THROWS_AS(parse_span("e1", 4), ParseError);
}

TEST_CASE("canonical bases are reduced column echelon forms") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<Index> amb(0, 6);
    const Index n = amb(rng);
    const Subspace u = random_subspace(n, 4, rng);
    const QMatrix& b = u.basis();
    CHECK(oracle_rank(b) == b.cols());
    Index last_pivot = -1;
    for (Index c = 0; c < b.cols(); ++c) {
      Index pivot = 0;
      while (b(pivot, c) == 0) ++pivot;
      CHECK(pivot > last_pivot);
      CHECK(b(pivot, c) == 1);
      for (Index o = 0; o < b.cols(); ++o) {
        if (o != c) CHECK(b(pivot, o) == 0);
      }
      last_pivot = pivot;
    }
    // Any other spanning set gives the same basis.
    std::uniform_int_distribution<int> v(-2, 2);
    QMatrix mix(b.cols(), b.cols() + 2);
    for (Index i = 0; i < mix.rows(); ++i) {
      for (Index j = 0; j < mix.cols(); ++j) mix(i, j) = v(rng);
    }
    const QMatrix other = b * mix;
    CHECK((Subspace::span(other) == u) == oracle_same_span(other, b));
  }
}

TEST_CASE("lattice operations agree with rank oracles") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<Index> amb(1, 6);
    const Index n = amb(rng);
    const Subspace u = random_subspace(n, n, rng);
    const Subspace v = random_subspace(n, n, rng);
    const Subspace w = random_subspace(n, n, rng);
    const Subspace s = sum(u, v);
    const Subspace i = intersect(u, v);
    QMatrix both(n, u.dim() + v.dim());
    both << u.basis(), v.basis();
    CHECK(s.dim() == oracle_rank(both));
    CHECK(oracle_span_contains(s.basis(), both));
    CHECK(i.dim() == u.dim() + v.dim() - s.dim());
    CHECK(oracle_span_contains(u.basis(), i.basis()));
    CHECK(oracle_span_contains(v.basis(), i.basis()));

    CHECK(complement(complement(u)) == u);
    CHECK(u.dim() + complement(u).dim() == n);
    CHECK(is_zero(QMatrix(u.basis().transpose() * complement(u).basis())));
    CHECK(contains(u, u));
    if (contains(u, v) && contains(v, w)) CHECK(contains(u, w));
    if (contains(u, v) && contains(v, u)) CHECK(u == v);

    CHECK(complement(intersect(u, v)) == sum(complement(u), complement(v)));
    CHECK(complement(sum(u, v)) == intersect(complement(u), complement(v)));
    CHECK(complement(intersect({u, v, w}, n)) ==
          sum({complement(u), complement(v), complement(w)}, n));

    // P_V(U^⊥) = V ⊖ (U ∩ V).
    CHECK(project_onto(v, complement(u)) == ominus(v, intersect(u, v)));
    const Subspace d = ominus(u, v);
    CHECK(contains(u, d));
    CHECK(is_zero(QMatrix(d.basis().transpose() * v.basis())));
    if (contains(u, v)) CHECK(d.dim() + v.dim() == u.dim());
  }
}

TEST_CASE("projection and application on random subspaces") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> val(-2, 2);
  for (int t = 0; t < 100; ++t) {
    const Partition n = testing::random_partition(3, 2, true, rng);
    const Index total = n.total();
    const Subspace u = random_subspace(total, total, rng);
    for (int j = 1; j <= 3; ++j) {
      const Subspace xj = coordinate_subspace(n, {j});
      CHECK(coordinate_project(u, n, {j}) == project_onto(xj, u));
      CHECK(contains(coordinate_project(u, n, {j}), intersect(u, xj)));
    }
    QMatrix m(total, total);
    for (Index i = 0; i < total; ++i) {
      for (Index j = 0; j < total; ++j) m(i, j) = val(rng);
    }
    const Subspace mu = apply(m, u);
    CHECK(oracle_same_span(mu.basis(), QMatrix(m * u.basis())));
    for (Index c = 0; c < u.dim(); ++c) CHECK(contains(u, QVector(u.basis().col(c))));
  }
}

}  // namespace
}  // namespace posetsys
