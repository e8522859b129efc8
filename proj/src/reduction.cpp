#include "posetsys/reduction.hpp"

#include <algorithm>

#include "posetsys/linalg.hpp"

namespace posetsys {

KalmanDecomposition kalman(const StateSpace& model) {
  const Subspace r = reachable_subspace(model.A, model.B);
  const Subspace n = unobservable_subspace(model.C, model.A);
  KalmanDecomposition k;
  k.c_no = intersect(r, n);
  k.co = ominus(r, k.c_no);
  k.nc_no = ominus(n, k.c_no);
  k.nc_o = complement(sum(r, n));
  if (k.co != project_onto(r, complement(n))) {
    throw CrossCheckFailure("R ⊖ (R ∩ N) differs from P_R(N^⊥)");
  }
  if (k.nc_no != project_onto(n, complement(r))) {
    throw CrossCheckFailure("N ⊖ (R ∩ N) differs from P_N(R^⊥)");
  }
  return k;
}

KalmanDecomposition kalman(const PosetCausalSystem& sys) { return kalman(state_space(sys)); }

std::vector<QMatrix> moments(const StateSpace& model, Index k_max) {
  std::vector<QMatrix> out;
  QMatrix akb = model.B;
  for (Index k = 0; k <= k_max; ++k) {
    out.push_back(model.C * akb);
    akb = (model.A * akb).eval();
  }
  return out;
}

bool moments_equal(const StateSpace& a, const StateSpace& b, std::optional<Index> k_max) {
  if (a.inputs() != b.inputs() || a.outputs() != b.outputs()) {
    throw DimensionMismatch("systems differ in input or output dimension");
  }
  const Index horizon = k_max.value_or(a.states() + b.states() - 1);
  return moments(a, horizon) == moments(b, horizon);
}

StateSpace compress_to(const StateSpace& model, const QMatrix& V) {
  if (V.rows() != model.states()) throw DimensionMismatch("basis does not fit the state");
  const QMatrix vt = V.transpose();
  const QMatrix gram = vt * V;
  StateSpace out;
  out.A = solve(gram, vt * model.A * V);
  out.B = solve(gram, vt * model.B);
  out.C = model.C * V;
  out.D = model.D;
  return out;
}

GeneralizedReduction generalized_reduce(const PosetCausalSystem& sys, const Subspace& r_inner,
                                        const Subspace& r_outer, const Subspace& n_inner) {
  const StateSpace model = state_space(sys);
  const Subspace r = reachable_subspace(model.A, model.B);
  const Subspace n = unobservable_subspace(model.C, model.A);
  if (!contains(r, r_inner)) throw InclusionViolation("hypothesis R' ⊆ R fails");
  if (!contains(r_outer, r)) throw InclusionViolation("hypothesis R ⊆ R'' fails");
  if (!contains(n, n_inner)) throw InclusionViolation("hypothesis N' ⊆ N fails");
  GeneralizedReduction out;
  out.subspace = ominus(r_outer, intersect(r_inner, n_inner));
  out.model = compress_to(model, out.subspace.basis());
  out.contains_xco = contains(out.subspace, kalman(model).co);
  out.horizon = model.states() + out.model.states() - 1;
  out.moments_preserved = moments_equal(model, out.model, out.horizon);
  return out;
}

std::string to_string(ReductionVariant v) {
  switch (v) {
    case ReductionVariant::primal:
      return "primal";
    case ReductionVariant::dual_tilde:
      return "dual-tilde";
    case ReductionVariant::dual_circ:
      return "dual-circ";
  }
  return "";
}

std::optional<ReductionVariant> parse_variant(const std::string& text) {
  std::string t = text;
  std::replace(t.begin(), t.end(), '_', '-');
  if (t == "primal") return ReductionVariant::primal;
  if (t == "dual-tilde") return ReductionVariant::dual_tilde;
  if (t == "dual-circ") return ReductionVariant::dual_circ;
  return std::nullopt;
}

ReducedSystem poset_reduce(const PosetCausalSystem& sys, ReductionVariant variant) {
  const Partition& n = sys.n();
  const int p = sys.p();
  const ReachabilityProfile rp = reachability_profile(sys);
  const ObservabilityProfile op = observability_profile(sys);

  ReducedSystem out;
  out.variant = variant;
  std::vector<Index> dims;
  for (int j = 1; j <= p; ++j) {
    const Subspace xj = coordinate_subspace(n, {j});
    Subspace block(n.total());
    switch (variant) {
      case ReductionVariant::primal:
        block = ominus(rp.tilde[j - 1], intersect(rp.bar[j - 1], op.bar[j - 1]));
        break;
      case ReductionVariant::dual_tilde:
        block = ominus(ominus(xj, op.bar[j - 1]),
                       intersect(ominus(xj, op.tilde[j - 1]), ominus(xj, rp.tilde[j - 1])));
        break;
      case ReductionVariant::dual_circ:
        block = ominus(ominus(xj, op.bar[j - 1]),
                       intersect(ominus(xj, op.circ[j - 1]), ominus(xj, rp.tilde[j - 1])));
        break;
    }
    out.bases.push_back(block.basis().middleRows(n.offset(j), n.size(j)));
    dims.push_back(block.dim());
    out.blocks.push_back(std::move(block));
  }
  out.subspace = sum(out.blocks, n.total());

  const Partition reduced_n(dims);
  QMatrix V = QMatrix::Zero(n.total(), reduced_n.total());
  for (int j = 1; j <= p; ++j) {
    V.block(n.offset(j), reduced_n.offset(j), n.size(j), reduced_n.size(j)) = out.bases[j - 1];
  }
  const StateSpace full = state_space(sys);
  const StateSpace small = compress_to(full, V);
  out.reduced = make_system(sys.poset, reduced_n, sys.m(), sys.r(), small.A, small.B, small.C,
                            small.D);
  if (!validate(out.reduced).ok) {
    throw CrossCheckFailure("reduced system left the incidence space");
  }

  const KalmanDecomposition k = kalman(full);
  out.contains_xco = contains(out.subspace, k.co);
  out.optimality_hypothesis = true;
  for (int j = 1; j <= p; ++j) {
    if (coordinate_project(out.subspace, n, {j}) != coordinate_project(k.co, n, {j})) {
      out.optimality_hypothesis = false;
    }
  }
  out.horizon = full.states() + small.states() - 1;
  out.moments_preserved = moments_equal(full, small, out.horizon);
  return out;
}

}  // namespace posetsys
