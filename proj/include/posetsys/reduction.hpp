#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posetsys/observability.hpp"
#include "posetsys/reachability.hpp"
#include "posetsys/subspace.hpp"
#include "posetsys/system.hpp"

namespace posetsys {

struct KalmanDecomposition {
  Subspace co;     // R ⊖ (R ∩ N)
  Subspace c_no;   // R ∩ N
  Subspace nc_o;   // (R + N)^⊥
  Subspace nc_no;  // N ⊖ (R ∩ N)
};

// Throws CrossCheckFailure if R ⊖ (R∩N) differs from P_R(N^⊥) or
// N ⊖ (R∩N) differs from P_N(R^⊥).
KalmanDecomposition kalman(const StateSpace& model);
KalmanDecomposition kalman(const PosetCausalSystem& sys);

// C A^k B for k = 0..k_max.
std::vector<QMatrix> moments(const StateSpace& model, Index k_max);

// Compares C A^k B for k = 0..k_max; k_max defaults to n1 + n2 - 1. D is not
// part of the moments. Throws DimensionMismatch on differing input/output
// counts.
bool moments_equal(const StateSpace& a, const StateSpace& b,
                   std::optional<Index> k_max = std::nullopt);

// (G^{-1} V^T A V, G^{-1} V^T B, C V, D) with G = V^T V.
StateSpace compress_to(const StateSpace& model, const QMatrix& V);

struct GeneralizedReduction {
  Subspace subspace;  // R'' ⊖ (R' ∩ N')
  StateSpace model;
  bool contains_xco = false;
  Index horizon = 0;
  bool moments_preserved = false;
};

// Requires R' ⊆ R ⊆ R'' and N' ⊆ N; throws InclusionViolation naming the
// failing hypothesis.
GeneralizedReduction generalized_reduce(const PosetCausalSystem& sys, const Subspace& r_inner,
                                        const Subspace& r_outer, const Subspace& n_inner);

enum class ReductionVariant { primal, dual_tilde, dual_circ };

std::string to_string(ReductionVariant v);
// "primal", "dual-tilde"/"dual_tilde", "dual-circ"/"dual_circ".
std::optional<ReductionVariant> parse_variant(const std::string& text);

struct ReducedSystem {
  ReductionVariant variant = ReductionVariant::primal;
  std::vector<Subspace> blocks;  // X̃_j in global coordinates, [j-1]
  Subspace subspace;             // ⊕ X̃_j
  std::vector<QMatrix> bases;    // V_j in the local coordinates of block j
  PosetCausalSystem reduced;
  Index horizon = 0;
  bool moments_preserved = false;
  bool contains_xco = false;
  // P_{X_j} X̃ = P_{X_j} X_co for every j.
  bool optimality_hypothesis = false;
};

ReducedSystem poset_reduce(const PosetCausalSystem& sys, ReductionVariant variant);

}  // namespace posetsys
