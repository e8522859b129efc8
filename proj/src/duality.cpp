#include "posetsys/duality.hpp"

#include <algorithm>

namespace posetsys {
namespace {

std::string sup(int j) { return std::to_string(j); }

class Recorder {
 public:
  explicit Recorder(DualityReport& r) : r_(r) {}

  void subspaces(const std::string& family, const std::string& name, const Subspace& lhs,
                 const Subspace& rhs) {
    add({family, name, lhs == rhs, lhs, rhs});
  }
  void flags(const std::string& family, const std::string& name, bool lhs, bool rhs) {
    add({family, name, lhs == rhs, std::nullopt, std::nullopt});
  }

 private:
  void add(IdentityCheck c) {
    r_.all_passed = r_.all_passed && c.passed;
    r_.checks.push_back(std::move(c));
  }
  DualityReport& r_;
};

}  // namespace

std::size_t DualityReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [](const IdentityCheck& c) { return !c.passed; }));
}

DualityReport verify_duality(const PosetCausalSystem& sys) {
  const PosetCausalSystem dual = dual_system(sys);
  const ReachabilityProfile pr = reachability_profile(sys);
  const ObservabilityProfile po = observability_profile(sys);
  const ReachabilityProfile dr = reachability_profile(dual);
  const ObservabilityProfile dob = observability_profile(dual);
  const Partition& n = sys.n();
  const int p = sys.p();

  DualityReport report;
  Recorder rec(report);

  rec.subspaces("classical", "R^d = N^⊥", dr.R, complement(po.N));
  rec.subspaces("classical", "N^d = R^⊥", dob.N, complement(pr.R));

  rec.subspaces("aggregate", "(R̄)^d = Ñ^⊥", dr.bar_total, complement(po.tilde_total));
  rec.subspaces("aggregate", "(R°)^d = N°^⊥", dr.circ_total, complement(po.circ_total));
  rec.subspaces("aggregate", "(R̃)^d = N̄^⊥", dr.tilde_total, complement(po.bar_total));
  rec.subspaces("aggregate", "(N̄)^d = R̃^⊥", dob.bar_total, complement(pr.tilde_total));
  rec.subspaces("aggregate", "(N°)^d = R°^⊥", dob.circ_total, complement(pr.circ_total));
  rec.subspaces("aggregate", "(Ñ)^d = R̄^⊥", dob.tilde_total, complement(pr.bar_total));

  for (int i = 1; i <= p; ++i) {
    const Subspace above = coordinate_subspace(n, up(sys.poset, i));
    const Subspace below = coordinate_subspace(n, down(sys.poset, i));
    rec.subspaces("downstream/upstream", "X_↑" + sup(i) + " ⊖ (R_" + sup(i) + ")^d = N_" + sup(i),
                  ominus(above, dr.downstream[i - 1]), po.upstream[i - 1]);
    rec.subspaces("downstream/upstream", "X_↓" + sup(i) + " ⊖ (N_" + sup(i) + ")^d = R_" + sup(i),
                  ominus(below, dob.upstream[i - 1]), pr.downstream[i - 1]);
  }

  for (int j = 1; j <= p; ++j) {
    for (int i = 1; i <= p; ++i) {
      const Subspace xi = coordinate_subspace(n, {i});
      const std::string ij = sup(i) + "^" + sup(j), ji = sup(j) + "^" + sup(i);
      if (sys.poset.geq(j, i)) {
        rec.subspaces("per-pair", "(Ñ_" + ji + ")^d = X_" + sup(i) + " ⊖ R̄_" + ij,
                      dob.tilde_pair.at({j, i}), ominus(xi, pr.bar_pair.at({i, j})));
        rec.subspaces("per-pair", "(N̄_" + ji + ")^d = X_" + sup(i) + " ⊖ R̃_" + ij,
                      dob.bar_pair.at({j, i}), ominus(xi, pr.tilde_pair.at({i, j})));
      }
      if (sys.poset.geq(i, j)) {
        rec.subspaces("per-pair", "(R̃_" + ij + ")^d = X_" + sup(i) + " ⊖ N̄_" + ji,
                      dr.tilde_pair.at({i, j}), ominus(xi, po.bar_pair.at({j, i})));
        rec.subspaces("per-pair", "(R̄_" + ij + ")^d = X_" + sup(i) + " ⊖ Ñ_" + ji,
                      dr.bar_pair.at({i, j}), ominus(xi, po.tilde_pair.at({j, i})));
      }
    }
  }

  for (int j = 1; j <= p; ++j) {
    const Subspace xj = coordinate_subspace(n, {j});
    const std::string s = sup(j);
    rec.subspaces("per-node", "(R̄_" + s + ")^d = X_" + s + " ⊖ Ñ^" + s, dr.bar[j - 1],
                  ominus(xj, po.tilde[j - 1]));
    rec.subspaces("per-node", "(R°_" + s + ")^d = X_" + s + " ⊖ N°^" + s, dr.circ[j - 1],
                  ominus(xj, po.circ[j - 1]));
    rec.subspaces("per-node", "(R̃_" + s + ")^d = X_" + s + " ⊖ N̄^" + s, dr.tilde[j - 1],
                  ominus(xj, po.bar[j - 1]));
    rec.subspaces("per-node", "(N̄^" + s + ")^d = X_" + s + " ⊖ R̃_" + s, dob.bar[j - 1],
                  ominus(xj, pr.tilde[j - 1]));
    rec.subspaces("per-node", "(N°^" + s + ")^d = X_" + s + " ⊖ R°_" + s, dob.circ[j - 1],
                  ominus(xj, pr.circ[j - 1]));
    rec.subspaces("per-node", "(Ñ^" + s + ")^d = X_" + s + " ⊖ R̄_" + s, dob.tilde[j - 1],
                  ominus(xj, pr.bar[j - 1]));
  }

  rec.flags("classification", "weakly locally controllable ⇔ dual weakly locally observable",
            pr.weakly_locally_controllable, dob.weakly_locally_observable);
  rec.flags("classification", "weakly locally observable ⇔ dual weakly locally controllable",
            po.weakly_locally_observable, dr.weakly_locally_controllable);
  rec.flags("classification", "controllable ⇔ dual observable", pr.controllable,
            dob.observable);
  rec.flags("classification", "observable ⇔ dual controllable", po.observable,
            dr.controllable);

  const ObservabilityProfile via = observability_profile_via_duality(sys);
  rec.flags("routes", "observability profile: direct route = dual route", true, via == po);
  return report;
}

}  // namespace posetsys
