#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "posetsys/errors.hpp"
#include "posetsys/polynomial.hpp"
#include "posetsys/subspace.hpp"
#include "posetsys/system.hpp"

namespace posetsys {

// [B, AB, ..., A^{n-1}B] with n = rows of A.
template <typename DerivedA, typename DerivedB>
Mat<typename DerivedA::Scalar> ctrb_matrix(const Eigen::MatrixBase<DerivedA>& A,
                                           const Eigen::MatrixBase<DerivedB>& B) {
  using Scalar = typename DerivedA::Scalar;
  if (A.rows() != A.cols() || B.rows() != A.rows()) {
    throw ShapeMismatch("ctrb_matrix: A must be square with as many rows as B");
  }
  const Index n = A.rows(), m = B.cols();
  Mat<Scalar> out(n, n * m);
  if (n == 0) return out;
  out.leftCols(m) = B;
  for (Index k = 1; k < n; ++k) {
    out.middleCols(k * m, m) = A * out.middleCols((k - 1) * m, m);
  }
  return out;
}

// Smallest A-invariant subspace containing im B, grown by Krylov steps.
Subspace reachable_subspace(const QMatrix& A, const QMatrix& B);

Subspace reachable(const PosetCausalSystem& sys);
// R_i of the i-th downstream system, in global coordinates.
Subspace downstream_reachable(const PosetCausalSystem& sys, int i);

// Keyed (subscript, superscript) as written in the notation, e.g. the entry
// for R̄_i^j sits under {i, j}.
using PairMap = std::map<std::pair<int, int>, Subspace>;

struct ReachabilityProfile {
  Subspace R;
  std::vector<Subspace> downstream;  // R_i at [i-1]
  PairMap bar_pair, tilde_pair;      // R̄_i^j, R̃_i^j for i in ↓j
  std::vector<Subspace> bar, circ, tilde, hat;  // per node, [j-1]
  Subspace bar_total, circ_total, tilde_total, hat_total;
  bool controllable = false;
  bool independently_controllable = false;
  bool weakly_upstream_controllable = false;
  bool weakly_locally_controllable = false;
};

ReachabilityProfile reachability_profile(const PosetCausalSystem& sys);

struct LocalControllability {
  bool all = true;
  std::vector<Index> local_rank;  // rank of ctrb(A_ii, B_ii), [i-1]
  std::vector<bool> controllable;
};

LocalControllability weakly_locally_controllable(const PosetCausalSystem& sys);

struct FactoredCharPoly {
  std::vector<Polynomial> blocks;  // char poly of A_ii, [i-1]
  Polynomial product;
};

// Throws StructureViolation if A is not structured, CrossCheckFailure if the
// product differs from det(sI - A).
FactoredCharPoly char_poly_factored(const QBlockMatrix& A, const Poset& poset);

// F with det(sI - A - BF) = target for a controllable pair (A, B). A
// multi-input pair is first reduced to a single input through a random
// feedback K0 and direction g drawn from `seed`.
QMatrix place_poles(const QMatrix& A, const QMatrix& B, const Polynomial& target,
                    std::uint64_t seed = 1);

// Block-diagonal structured F with det(sI - A_ii - B_ii F_ii) = targets[i-1].
// Throws NotWeaklyLocallyControllable naming the first uncontrollable local
// pair, DimensionMismatch if a target has the wrong degree or is not monic.
QBlockMatrix pole_place(const PosetCausalSystem& sys, const std::vector<Polynomial>& targets,
                        std::uint64_t seed = 1);

}  // namespace posetsys
