#pragma once

#include <string>
#include <utility>
#include <vector>

#include "posetsys/errors.hpp"
#include "posetsys/linalg.hpp"
#include "posetsys/poset.hpp"
#include "posetsys/rational.hpp"

namespace posetsys {

// Block sizes (n_1, ..., n_p); zero sizes are allowed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Index> sizes) : sizes_(std::move(sizes)) {
    for (Index s : sizes_) {
      if (s < 0) throw ShapeMismatch("negative block size");
      offsets_.push_back(offsets_.back() + s);
    }
  }

  int parts() const { return static_cast<int>(sizes_.size()); }
  Index total() const { return offsets_.back(); }
  Index size(int j) const { return sizes_.at(j - 1); }
  Index offset(int j) const { return offsets_.at(j - 1); }
  const std::vector<Index>& sizes() const { return sizes_; }

  // n̄_S: sizes outside S are zeroed.
  Partition restricted(const NodeSet& s) const {
    std::vector<Index> out(sizes_.size(), 0);
    for (int j : s) out.at(j - 1) = sizes_.at(j - 1);
    return Partition(std::move(out));
  }

  // Global coordinates of the blocks in S, in block order.
  std::vector<Index> coordinates(const NodeSet& s) const {
    std::vector<Index> out;
    for (int j : s) {
      for (Index k = 0; k < size(j); ++k) out.push_back(offset(j) + k);
    }
    return out;
  }

  // Block label owning global coordinate k.
  int owner(Index k) const {
    for (int j = 1; j <= parts(); ++j) {
      if (k < offset(j) + size(j)) return j;
    }
    throw IndexOutOfRange("coordinate outside partition");
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.sizes_ == b.sizes_;
  }

 private:
  std::vector<Index> sizes_;
  std::vector<Index> offsets_{0};
};

template <typename Scalar>
class BlockMatrix {
 public:
  BlockMatrix() = default;
  BlockMatrix(Mat<Scalar> entries, Partition rows, Partition cols)
      : entries_(std::move(entries)), rows_(std::move(rows)), cols_(std::move(cols)) {
    if (entries_.rows() != rows_.total() || entries_.cols() != cols_.total()) {
      throw ShapeMismatch("matrix is " + std::to_string(entries_.rows()) + "x" +
                          std::to_string(entries_.cols()) + " but partitions sum to " +
                          std::to_string(rows_.total()) + "x" +
                          std::to_string(cols_.total()));
    }
  }

  static BlockMatrix Zero(const Partition& rows, const Partition& cols) {
    return BlockMatrix(Mat<Scalar>::Zero(rows.total(), cols.total()), rows, cols);
  }

  const Mat<Scalar>& entries() const { return entries_; }
  const Partition& row_partition() const { return rows_; }
  const Partition& col_partition() const { return cols_; }
  Index rows() const { return entries_.rows(); }
  Index cols() const { return entries_.cols(); }

  auto block(int i, int j) const {
    return entries_.block(rows_.offset(i), cols_.offset(j), rows_.size(i), cols_.size(j));
  }

  BlockMatrix transpose() const { return BlockMatrix(entries_.transpose(), cols_, rows_); }

  template <typename Other>
  BlockMatrix<Other> cast() const {
    return BlockMatrix<Other>(entries_.template cast<Other>(), rows_, cols_);
  }

  friend bool operator==(const BlockMatrix& a, const BlockMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  Mat<Scalar> entries_;
  Partition rows_, cols_;
};

using QBlockMatrix = BlockMatrix<Rational>;

template <typename Scalar>
BlockMatrix<Scalar> operator*(const BlockMatrix<Scalar>& g, const BlockMatrix<Scalar>& h) {
  if (!(g.col_partition() == h.row_partition())) {
    throw IncompatibleShapes("column partition of the left factor differs from the row "
                             "partition of the right factor");
  }
  return BlockMatrix<Scalar>(g.entries() * h.entries(), g.row_partition(),
                             h.col_partition());
}

// Blocks (i, j) with G_ij != 0 although j does not dominate i.
template <typename Scalar>
std::vector<std::pair<int, int>> incidence_violations(const BlockMatrix<Scalar>& m,
                                                      const Poset& poset) {
  if (m.row_partition().parts() != poset.size() ||
      m.col_partition().parts() != poset.size()) {
    throw PartitionMismatch("partition has " + std::to_string(m.row_partition().parts()) +
                            "x" + std::to_string(m.col_partition().parts()) +
                            " parts, poset has " + std::to_string(poset.size()));
  }
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= poset.size(); ++i) {
    for (int j = 1; j <= poset.size(); ++j) {
      if (!poset.geq(j, i) && !is_zero(m.block(i, j))) out.emplace_back(i, j);
    }
  }
  return out;
}

template <typename Scalar>
bool is_incident(const BlockMatrix<Scalar>& m, const Poset& poset) {
  return incidence_violations(m, poset).empty();
}

// M(R, S): the blocks in R x S, partitions keep p parts with zeroed sizes.
template <typename Scalar>
BlockMatrix<Scalar> compress(const BlockMatrix<Scalar>& m, const NodeSet& r,
                             const NodeSet& s) {
  const std::vector<Index> ri = m.row_partition().coordinates(r);
  const std::vector<Index> ci = m.col_partition().coordinates(s);
  Mat<Scalar> out(static_cast<Index>(ri.size()), static_cast<Index>(ci.size()));
  for (std::size_t a = 0; a < ri.size(); ++a) {
    for (std::size_t b = 0; b < ci.size(); ++b) out(a, b) = m.entries()(ri[a], ci[b]);
  }
  return BlockMatrix<Scalar>(std::move(out), m.row_partition().restricted(r),
                             m.col_partition().restricted(s));
}

template <typename Scalar>
BlockMatrix<Scalar> structured_multiply(const BlockMatrix<Scalar>& g,
                                        const BlockMatrix<Scalar>& h, const Poset& poset) {
  if (!is_incident(g, poset) || !is_incident(h, poset)) {
    throw StructureViolation("factor is not in the incidence space");
  }
  BlockMatrix<Scalar> gh = g * h;
  if (!is_incident(gh, poset)) {
    throw StructureViolation("product left the incidence space");
  }
  return gh;
}

template <typename Scalar>
BlockMatrix<Scalar> structured_inverse(const BlockMatrix<Scalar>& k, const Poset& poset) {
  if (!(k.row_partition() == k.col_partition())) {
    throw IncompatibleShapes("structured inverse needs equal row and column partitions");
  }
  if (!is_incident(k, poset)) {
    throw StructureViolation("matrix is not in the incidence space");
  }
  BlockMatrix<Scalar> inv(inverse(k.entries()), k.row_partition(), k.col_partition());
  if (!is_incident(inv, poset)) {
    throw StructureViolation("inverse left the incidence space");
  }
  return inv;
}

// G(Q,R) H(R,S), which equals (GH)(Q,S) whenever ↓S ⊆ R.
template <typename Scalar>
BlockMatrix<Scalar> compressed_product(const BlockMatrix<Scalar>& g,
                                       const BlockMatrix<Scalar>& h, const Poset& poset,
                                       const NodeSet& q, const NodeSet& s,
                                       const NodeSet& r) {
  if (!is_subset(derived_set(poset, s, SetKind::down), r)) {
    throw DownSetNotContained("down-set of S is not contained in R");
  }
  if (!is_incident(h, poset)) {
    throw StructureViolation("right factor is not in the incidence space");
  }
  return compress(g, q, r) * compress(h, r, s);
}

template <typename Scalar>
BlockMatrix<Scalar> compressed_product(const BlockMatrix<Scalar>& g,
                                       const BlockMatrix<Scalar>& h, const Poset& poset,
                                       const NodeSet& q, const NodeSet& s) {
  return compressed_product(g, h, poset, q, s, derived_set(poset, s, SetKind::down));
}

template <typename Scalar = Rational>
BlockMatrix<Scalar> block_identity(const Partition& n) {
  return BlockMatrix<Scalar>(Mat<Scalar>::Identity(n.total(), n.total()), n, n);
}

// I(:, S).
template <typename Scalar = Rational>
BlockMatrix<Scalar> embed(const Partition& n, const NodeSet& s) {
  return compress(block_identity<Scalar>(n), all_nodes(n.parts()), s);
}

// I(S, :).
template <typename Scalar = Rational>
BlockMatrix<Scalar> project(const Partition& n, const NodeSet& s) {
  return embed<Scalar>(n, s).transpose();
}

}  // namespace posetsys
