#pragma once

#include <vector>

#include "posetsys/reachability.hpp"
#include "posetsys/subspace.hpp"
#include "posetsys/system.hpp"

namespace posetsys {

// [C; CA; ...; CA^{n-1}] = ctrb(A^T, C^T)^T.
template <typename DerivedC, typename DerivedA>
Mat<typename DerivedA::Scalar> obsv_matrix(const Eigen::MatrixBase<DerivedC>& C,
                                           const Eigen::MatrixBase<DerivedA>& A) {
  if (A.rows() != A.cols() || C.cols() != A.rows()) {
    throw ShapeMismatch("obsv_matrix: A must be square with as many columns as C");
  }
  return ctrb_matrix(A.transpose(), C.transpose()).transpose();
}

// ker obsv(C, A): the largest A-invariant subspace inside ker C.
Subspace unobservable_subspace(const QMatrix& C, const QMatrix& A);

Subspace unobservable(const PosetCausalSystem& sys);
// N_i of the i-th upstream system, in global coordinates.
Subspace upstream_indistinguishable(const PosetCausalSystem& sys, int i);

struct ObservabilityProfile {
  Subspace N;
  std::vector<Subspace> upstream;  // N_i at [i-1]
  PairMap bar_pair, tilde_pair;    // N̄_i^j, Ñ_i^j for j in ↑i, keyed {i, j}
  std::vector<Subspace> bar, circ, tilde;  // N̄^j, N°^j, Ñ^j at [j-1]
  Subspace bar_total, circ_total, tilde_total;
  bool observable = false;
  bool independently_observable = false;
  bool weakly_downstream_observable = false;
  bool weakly_locally_observable = false;

  friend bool operator==(const ObservabilityProfile&, const ObservabilityProfile&) = default;
};

ObservabilityProfile observability_profile(const PosetCausalSystem& sys);

// Same profile computed from the reachability profile of the dual system.
ObservabilityProfile observability_profile_via_duality(const PosetCausalSystem& sys);

}  // namespace posetsys
