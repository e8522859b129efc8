#include "posetsys/demo.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <tuple>

#include "posetsys/io.hpp"
#include "posetsys/observability.hpp"
#include "posetsys/polynomial.hpp"
#include "posetsys/random.hpp"
#include "posetsys/reachability.hpp"
#include "posetsys/reduction.hpp"
#include "posetsys/report.hpp"

namespace posetsys {
namespace {

std::string node_set_string(const NodeSet& s) {
  std::string out = "{";
  for (int i : s) out += (out.size() > 1 ? ", " : "") + std::to_string(i);
  return out + "}";
}

std::string edge_list_string(const std::vector<Edge>& edges) {
  std::string out;
  for (const auto& [j, i] : edges) {
    out += (out.empty() ? "" : ", ") + std::to_string(j) + "⪰" + std::to_string(i);
  }
  return out;
}

class Checker {
 public:
  Checker(DemoResult& result, Index ambient) : result_(result), ambient_(ambient) {}

  void span(std::string quantity, const std::string& published, const Subspace& computed) {
    const Subspace expected = parse_span(published, ambient_);
    add(std::move(quantity), published, to_span_string(computed), expected == computed);
  }
  void flag(std::string quantity, bool published, bool computed) {
    add(std::move(quantity), yes_no(published), yes_no(computed), published == computed);
  }
  void nodes(std::string quantity, const NodeSet& published, const NodeSet& computed) {
    add(std::move(quantity), node_set_string(published), node_set_string(computed),
        published == computed);
  }
  void text(std::string quantity, const std::string& published, const std::string& computed) {
    add(std::move(quantity), published, computed, published == computed);
  }
  void number(std::string quantity, long published, long computed) {
    add(std::move(quantity), std::to_string(published), std::to_string(computed),
        published == computed);
  }

 private:
  static std::string yes_no(bool b) { return b ? "yes" : "no"; }
  void add(std::string q, std::string p, std::string c, bool match) {
    result_.checks.push_back({std::move(q), std::move(p), std::move(c), match});
  }

  DemoResult& result_;
  Index ambient_;
};

using DemoFn = std::function<void(const PosetCausalSystem&, Checker&)>;

void four_node(const PosetCausalSystem& sys, Checker& c) {
  const Poset& P = sys.poset;
  c.text("Hasse edges", "1⪰2, 2⪰4, 3⪰2", edge_list_string(hasse_edges(P)));
  c.nodes("↓1", {1, 2, 4}, down(P, 1));
  c.nodes("⇓1", {2, 4}, strict_down(P, 1));
  c.nodes("↑4", {1, 2, 3, 4}, up(P, 4));
  c.nodes("⇑2", {1, 3}, strict_up(P, 2));
}

DemoFn ultra(std::optional<bool> in, std::optional<bool> out) {
  return [in, out](const PosetCausalSystem& sys, Checker& c) {
    const UltraTransitivity u = ultra_transitivity(sys.poset);
    if (in) c.flag("in-ultra transitive", *in, u.is_in_ultra);
    if (out) c.flag("out-ultra transitive", *out, u.is_out_ultra);
  };
}

void poset_p3(const PosetCausalSystem& sys, Checker& c) {
  ultra(std::nullopt, true)(sys, c);
  const Poset p1 = parse_system(corpus_entry("posetP1").json).poset;
  c.flag("P3 is the dual of P1", true, dual_poset(p1) == sys.poset);
}

void poset_p6(const PosetCausalSystem& sys, Checker& c) {
  bool total = true;
  for (int i = 1; i <= sys.p(); ++i) {
    for (int j = 1; j <= sys.p(); ++j) total = total && sys.poset.comparable(i, j);
  }
  c.flag("complete order", true, total);
}

void large_example(const PosetCausalSystem& sys, Checker& c) {
  const ReachabilityProfile r = reachability_profile(sys);
  c.span("R", "span{e1, e3, e4, e5+e10, e6, e8, e9, e11}", r.R);
  c.span("R_1", "span{e1, e3, e4+e8, e9}", r.downstream[0]);
  c.span("R_2", "span{e4, e9}", r.downstream[1]);
  c.span("R_3", "span{e5+e10, e6+e11}", r.downstream[2]);
  c.span("R_4", "span{e9, e11}", r.downstream[3]);
  const std::vector<std::tuple<int, int, const char*>> pairs = {
      {1, 1, "span{e1}"}, {2, 1, "span{e3}"}, {4, 1, "span{e9}"}, {2, 2, "span{e4}"},
      {4, 2, "span{e9}"}, {3, 3, "{0}"},      {4, 3, "{0}"},      {4, 4, "span{e9, e11}"}};
  for (const auto& [sub, sup, text] : pairs) {
    c.span("R̄_" + std::to_string(sub) + "^" + std::to_string(sup), text,
           r.bar_pair.at({sub, sup}));
  }
  const std::vector<std::array<const char*, 3>> nodes = {
      {"span{e1}", "span{e1}", "span{e1}"},
      {"span{e3, e4}", "span{e3, e4}", "span{e3, e4}"},
      {"{0}", "span{e6}", "span{e5, e6}"},
      {"span{e9, e11}", "span{e8, e9, e11}", "span{e8, e9, e10, e11}"}};
  for (int j = 1; j <= 4; ++j) {
    const std::string s = std::to_string(j);
    c.span("R̄_" + s, nodes[j - 1][0], r.bar[j - 1]);
    c.span("R°_" + s, nodes[j - 1][1], r.circ[j - 1]);
    c.span("R̃_" + s, nodes[j - 1][2], r.tilde[j - 1]);
  }
  c.span("R̄", "span{e1, e3, e4, e9, e11}", r.bar_total);
  c.span("R°", "span{e1, e3, e4, e6, e8, e9, e11}", r.circ_total);
  c.span("R̃", "span{e1, e3, e4, e5, e6, e8, e9, e10, e11}", r.tilde_total);
  const Index n = sys.n().total();
  c.text("chain", "{0} ⊊ R̄ ⊊ R° ⊊ R ⊊ R̃ ⊊ X",
         inclusion_chain({{"{0}", Subspace(n)}, {"R̄", r.bar_total}, {"R°", r.circ_total},
                          {"R", r.R}, {"R̃", r.tilde_total}, {"X", Subspace::whole(n)}}));
  const QMatrix& A = sys.A.entries();
  c.span("A R̄", "span{e1, e3, e9, e11}", apply(A, r.bar_total));
  c.span("A R°", "span{e1, e3, e9, e11}", apply(A, r.circ_total));
  c.span("A R", "span{e1, e3, e9, e11}", apply(A, r.R));
  c.flag("controllable", false, r.controllable);
  c.flag("independently controllable", false, r.independently_controllable);
  c.flag("weakly upstream controllable", false, r.weakly_upstream_controllable);
}

void two_node_hat(const PosetCausalSystem& sys, Checker& c) {
  const ReachabilityProfile r = reachability_profile(sys);
  c.span("R", "span{e1+e2}", r.R);
  c.span("R_1", "span{e1+e2}", r.downstream[0]);
  c.span("R_2", "{0}", r.downstream[1]);
  c.span("R̃_1^1", "span{e1}", r.tilde_pair.at({1, 1}));
  c.span("R̃_2^2", "{0}", r.tilde_pair.at({2, 2}));
  c.span("R̂", "span{e1}", r.hat_total);
  c.flag("R̂ ⊆ R", false, contains(r.R, r.hat_total));
}

void chain_placement(const PosetCausalSystem& sys, Checker& c) {
  const Poset& P = sys.poset;
  c.nodes("↓1", {1, 2, 3}, down(P, 1));
  c.nodes("↓2", {1, 2}, down(P, 2));
  c.nodes("↓3", {3}, down(P, 3));
  const ReachabilityProfile r = reachability_profile(sys);
  c.span("R", "span{e1, e2, e3, e4, e5}", r.R);
  c.span("R_1", "span{e1+e3, e2, e4+e5}", r.downstream[0]);
  c.span("R_2", "span{e3+e5}", r.downstream[1]);
  c.span("R_3", "span{e5}", r.downstream[2]);
  c.span("R̃_1^1", "span{e1, e2}", r.tilde_pair.at({1, 1}));
  c.span("R̃_2^2", "span{e3}", r.tilde_pair.at({2, 2}));
  c.span("R̃_3^3", "span{e5}", r.tilde_pair.at({3, 3}));
  c.flag("controllable", true, r.controllable);
  c.flag("weakly locally controllable", false, r.weakly_locally_controllable);
  std::mt19937_64 rng(20240601);
  constexpr int kTrials = 100;
  int singular = 0;
  for (int t = 0; t < kTrials; ++t) {
    const QBlockMatrix F = random_incidence(P, sys.m(), sys.n(), -5, 5, rng);
    const QMatrix closed = sys.A.entries() + sys.B.entries() * F.entries();
    if (char_poly(closed).coefficient(0) == 0) ++singular;
  }
  c.number("structured F with 0 an eigenvalue of A+BF (of 100)", kTrials, singular);
}

void obs_example(const PosetCausalSystem& sys, Checker& c) {
  const ObservabilityProfile o = observability_profile(sys);
  c.span("N", "span{-e2+e4, -e5+e10, e8, e9, e11}", o.N);
  c.span("N_1", "span{e2}", o.upstream[0]);
  c.span("N_2", "span{e1, -e2+e4, e3}", o.upstream[1]);
  c.span("N_3", "span{e5, e7}", o.upstream[2]);
  c.span("N_4", "span{e2, e4, -e5+e10, e6, e8, e9, e11}", o.upstream[3]);
  const std::vector<std::array<const char*, 2>> nodes = {{"{0}", "span{e2}"},
                                                         {"{0}", "span{e4}"},
                                                         {"{0}", "span{e5}"},
                                                         {"span{e8, e9, e11}",
                                                          "span{e8, e9, e10, e11}"}};
  for (int j = 1; j <= 4; ++j) {
    const std::string s = std::to_string(j);
    c.span("N̄^" + s, nodes[j - 1][0], o.bar[j - 1]);
    c.span("Ñ^" + s, nodes[j - 1][1], o.tilde[j - 1]);
    c.span("N°^" + s, nodes[j - 1][1], o.circ[j - 1]);
  }
  c.span("N̄", "span{e8, e9, e11}", o.bar_total);
  c.span("Ñ", "span{e2, e4, e5, e8, e9, e10, e11}", o.tilde_total);
  c.span("N°", "span{e2, e4, e5, e8, e9, e10, e11}", o.circ_total);
  const Index n = sys.n().total();
  c.text("chain", "{0} ⊊ N̄ ⊊ N ⊊ N° = Ñ ⊊ X",
         inclusion_chain({{"{0}", Subspace(n)}, {"N̄", o.bar_total}, {"N", o.N},
                          {"N°", o.circ_total}, {"Ñ", o.tilde_total},
                          {"X", Subspace::whole(n)}}));
  c.flag("observable", false, o.observable);
  c.flag("independently observable", false, o.independently_observable);
  c.flag("weakly downstream observable", false, o.weakly_downstream_observable);
}

void non_optimal(const PosetCausalSystem& sys, Checker& c) {
  const ReachabilityProfile r = reachability_profile(sys);
  const ObservabilityProfile o = observability_profile(sys);
  const KalmanDecomposition k = kalman(sys);
  const Partition& n = sys.n();
  c.span("R", "span{e1, e2+e4}", r.R);
  c.span("N", "span{e2, e4}", o.N);
  c.span("X_co", "span{e1}", k.co);
  c.span("P_X1 X_co", "span{e1}", project_onto(k.co, coordinate_subspace(n, {1})));
  c.span("P_X2 X_co", "{0}", project_onto(k.co, coordinate_subspace(n, {2})));
  c.span("R̃_1", "span{e1, e2}", r.tilde[0]);
  c.span("R°_1", "span{e1}", r.circ[0]);
  c.span("N̄^1", "span{e2}", o.bar[0]);
  c.span("R̃_2", "span{e4}", r.tilde[1]);
  c.span("R°_2", "{0}", r.circ[1]);
  c.span("N̄^2", "span{e4}", o.bar[1]);
  c.span("X'_1", "span{e1, e2}", ominus(r.tilde[0], intersect(r.circ[0], o.bar[0])));
  c.span("X'_2", "span{e4}", ominus(r.tilde[1], intersect(r.circ[1], o.bar[1])));
  c.flag("R̄ = R°", true, r.bar_total == r.circ_total);
  const ReducedSystem red = poset_reduce(sys, ReductionVariant::primal);
  c.number("primal reduction dimension", 3, static_cast<long>(red.subspace.dim()));
  c.flag("P_Xj X̃ = P_Xj X_co for all j", false, red.optimality_hypothesis);
  c.flag("moments preserved", true, red.moments_preserved);
}

void dual_minimal(const PosetCausalSystem& sys, Checker& c) {
  const ReachabilityProfile r = reachability_profile(sys);
  const ObservabilityProfile o = observability_profile(sys);
  c.span("Ñ", "span{e2, e4}", o.tilde_total);
  c.span("N°", "span{e2, e4}", o.circ_total);
  c.span("N", "span{e2, e4}", o.N);
  c.span("N̄", "span{e2, e4}", o.bar_total);
  c.span("R", "span{e1, e2+e4}", r.R);
  c.span("R̃", "span{e1, e2, e4}", r.tilde_total);
  c.span("N̄^⊥", "span{e1, e3}", complement(o.bar_total));
  c.span("Ñ^⊥", "span{e1, e3}", complement(o.tilde_total));
  c.span("N°^⊥", "span{e1, e3}", complement(o.circ_total));
  c.span("N^⊥", "span{e1, e3}", complement(o.N));
  c.span("R^⊥", "span{e2-e4, e3}", complement(r.R));
  c.span("R̃^⊥", "span{e3}", complement(r.tilde_total));
  const Subspace np = complement(o.N);
  c.span("N^⊥ ⊖ (N^⊥ ∩ R^⊥)", "span{e1}", ominus(np, intersect(np, complement(r.R))));
  c.span("Ñ^⊥ ⊖ (N̄^⊥ ∩ R̃^⊥)", "span{e1}",
         ominus(complement(o.tilde_total),
                intersect(complement(o.bar_total), complement(r.tilde_total))));
  const ReducedSystem red = poset_reduce(sys, ReductionVariant::dual_tilde);
  c.number("dual-tilde reduction dimension", 1, static_cast<long>(red.subspace.dim()));
  c.flag("moments preserved", true, red.moments_preserved);
}

const std::map<std::string, DemoFn>& demos() {
  static const std::map<std::string, DemoFn> table = {
      {"fourNodePoset", four_node},
      {"posetP1", ultra(true, std::nullopt)},
      {"posetP2", ultra(true, std::nullopt)},
      {"posetP3", poset_p3},
      {"posetP4", ultra(std::nullopt, true)},
      {"posetP5", ultra(false, false)},
      {"posetP6", poset_p6},
      {"exLargeEx", large_example},
      {"twoNodeHat", two_node_hat},
      {"chainPlacement", chain_placement},
      {"exObsEx", obs_example},
      {"exNonOpt", non_optimal},
      {"exDualMinimal", dual_minimal},
  };
  return table;
}

}  // namespace

bool DemoResult::passed() const {
  for (const DemoCheck& c : checks) {
    if (!c.match) return false;
  }
  return true;
}

DemoResult run_demo(const CorpusEntry& entry) {
  DemoResult result;
  result.name = entry.name;
  result.description = entry.description;
  const PosetCausalSystem sys = parse_system(entry.json);
  Checker checker(result, sys.n().total());
  checker.flag("system validates", true, validate(sys).ok);
  auto it = demos().find(entry.name);
  if (it != demos().end()) it->second(sys, checker);
  return result;
}

std::string render_demo(const DemoResult& result) {
  std::ostringstream out;
  out << result.name;
  if (!result.description.empty()) out << ": " << result.description;
  out << "\n";
  for (const DemoCheck& c : result.checks) {
    out << (c.match ? "  ok        " : "  MISMATCH  ") << c.quantity << "\n"
        << "    published: " << c.published << "\n"
        << "    computed:  " << c.computed << "\n";
  }
  out << (result.passed() ? "all published quantities match\n"
                          : "published quantities do not all match\n");
  return out.str();
}

}  // namespace posetsys
