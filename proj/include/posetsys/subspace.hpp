#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "posetsys/blockmat.hpp"
#include "posetsys/rational.hpp"

namespace posetsys {

// Subspace of Q^n held by its canonical basis: the reduced column echelon
// form, pivots normalized to 1, columns ordered by pivot row. Equal
// subspaces therefore have identical bases.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient) : ambient_(ambient), basis_(ambient, 0) {}

  static Subspace span(const QMatrix& columns);
  static Subspace whole(Index ambient);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  const QMatrix& basis() const { return basis_; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Index ambient_ = 0;
  QMatrix basis_;
};

Subspace image(const QMatrix& m);
Subspace kernel(const QMatrix& m);

Subspace sum(const Subspace& u, const Subspace& v);
Subspace sum(const std::vector<Subspace>& terms, Index ambient);
Subspace intersect(const Subspace& u, const Subspace& v);
Subspace intersect(const std::vector<Subspace>& terms, Index ambient);
Subspace complement(const Subspace& u);
// U ∩ V^⊥.
Subspace ominus(const Subspace& u, const Subspace& v);
// V ⊆ U.
bool contains(const Subspace& u, const Subspace& v);
bool contains(const Subspace& u, const QVector& x);
inline bool equals(const Subspace& u, const Subspace& v) { return u == v; }
inline Index dim(const Subspace& u) { return u.dim(); }

// M U.
Subspace apply(const QMatrix& m, const Subspace& u);
// Orthogonal projection of W onto U, P_U(W).
Subspace project_onto(const Subspace& u, const Subspace& w);

// X_S = I(:,S) applied to everything: the coordinate blocks in S.
Subspace coordinate_subspace(const Partition& n, const NodeSet& s);
// P_{X_S} U, in global coordinates.
Subspace coordinate_project(const Subspace& u, const Partition& n, const NodeSet& s);
// I(:,S) U for U given in the compressed coordinates of S.
Subspace embed(const Subspace& u, const Partition& n, const NodeSet& s);

// "span{e1, e4+e8, -1/2e2+e3}" or "{0}", 1-based coordinates.
std::string to_span_string(const Subspace& u);
std::string to_span_string(const QVector& v);

// Inverse of to_span_string; accepts any spanning list, not only a canonical
// one. ParseError on malformed text or coordinates above `ambient`.
Subspace parse_span(std::string_view text, Index ambient);

}  // namespace posetsys
