#include "posetsys/observability.hpp"

#include <string>

namespace posetsys {
namespace {

void set_aggregates_and_flags(ObservabilityProfile& pr, int p, Index total) {
  pr.bar_total = sum(pr.bar, total);
  pr.circ_total = sum(pr.circ, total);
  pr.tilde_total = sum(pr.tilde, total);
  pr.observable = pr.N.is_zero();
  pr.independently_observable = pr.tilde_total.is_zero();
  pr.weakly_downstream_observable = pr.bar_total.is_zero();
  pr.weakly_locally_observable = true;
  for (int i = 1; i <= p; ++i) {
    if (!pr.bar_pair.at({i, i}).is_zero()) pr.weakly_locally_observable = false;
  }
}

}  // namespace

Subspace unobservable_subspace(const QMatrix& C, const QMatrix& A) {
  if (A.rows() != A.cols() || C.cols() != A.rows()) {
    throw ShapeMismatch("unobservable_subspace: A must be square with as many columns as C");
  }
  // Row space of obsv(C, A), grown by Krylov steps, then its kernel.
  return complement(reachable_subspace(A.transpose(), C.transpose()));
}

Subspace unobservable(const PosetCausalSystem& sys) {
  return unobservable_subspace(sys.C.entries(), sys.A.entries());
}

Subspace upstream_indistinguishable(const PosetCausalSystem& sys, int i) {
  const DerivedSystem us = derived(sys, DerivedKind::upstream, i);
  return embed(unobservable_subspace(us.model.C, us.model.A), sys.n(), us.state_blocks);
}

ObservabilityProfile observability_profile(const PosetCausalSystem& sys) {
  const Partition& n = sys.n();
  const Index total = n.total();
  const int p = sys.p();
  ObservabilityProfile pr;
  pr.N = unobservable(sys);
  std::vector<Subspace> x;
  for (int j = 1; j <= p; ++j) {
    x.push_back(coordinate_subspace(n, {j}));
    pr.upstream.push_back(upstream_indistinguishable(sys, j));
  }
  for (int i = 1; i <= p; ++i) {
    for (int j : up(sys.poset, i)) {
      pr.bar_pair[{i, j}] = intersect(pr.upstream[i - 1], x[j - 1]);
      pr.tilde_pair[{i, j}] = coordinate_project(pr.upstream[i - 1], n, {j});
    }
  }
  for (int j = 1; j <= p; ++j) {
    std::vector<Subspace> bars, tildes;
    for (int i : down(sys.poset, j)) {
      bars.push_back(pr.bar_pair.at({i, j}));
      tildes.push_back(pr.tilde_pair.at({i, j}));
    }
    pr.bar.push_back(intersect(bars, total));
    pr.tilde.push_back(intersect(tildes, total));
    pr.circ.push_back(coordinate_project(pr.N, n, {j}));
    if (pr.bar.back() != intersect(x[j - 1], pr.N)) {
      throw CrossCheckFailure("N̄^" + std::to_string(j) + " differs from X" +
                              std::to_string(j) + " ∩ N");
    }
  }
  std::vector<Subspace> lifted;
  for (int i = 1; i <= p; ++i) {
    const NodeSet rest = set_difference(sys.poset.all(), up(sys.poset, i));
    lifted.push_back(sum(pr.upstream[i - 1], coordinate_subspace(n, rest)));
  }
  if (intersect(lifted, total) != pr.N) {
    throw CrossCheckFailure("N differs from the intersection of the lifted upstream sets");
  }
  set_aggregates_and_flags(pr, p, total);
  return pr;
}

ObservabilityProfile observability_profile_via_duality(const PosetCausalSystem& sys) {
  const ReachabilityProfile d = reachability_profile(dual_system(sys));
  const Partition& n = sys.n();
  const Index total = n.total();
  const int p = sys.p();
  ObservabilityProfile pr;
  pr.N = complement(d.R);
  std::vector<Subspace> x;
  for (int j = 1; j <= p; ++j) {
    x.push_back(coordinate_subspace(n, {j}));
    const Subspace above = coordinate_subspace(n, up(sys.poset, j));
    pr.upstream.push_back(ominus(above, d.downstream[j - 1]));
  }
  // In the dual, ↓_d i = ↑i, so R̄_j^i and R̃_j^i of the dual exist for j in ↑i.
  for (int i = 1; i <= p; ++i) {
    for (int j : up(sys.poset, i)) {
      pr.bar_pair[{i, j}] = ominus(x[j - 1], d.tilde_pair.at({j, i}));
      pr.tilde_pair[{i, j}] = ominus(x[j - 1], d.bar_pair.at({j, i}));
    }
  }
  for (int j = 1; j <= p; ++j) {
    pr.bar.push_back(ominus(x[j - 1], d.tilde[j - 1]));
    pr.circ.push_back(ominus(x[j - 1], d.circ[j - 1]));
    pr.tilde.push_back(ominus(x[j - 1], d.bar[j - 1]));
  }
  set_aggregates_and_flags(pr, p, total);
  return pr;
}

}  // namespace posetsys
