#include "posetsys/report.hpp"

#include <sstream>

#include <json.hpp>

#include "posetsys/io.hpp"

namespace posetsys {
namespace {

using ojson = nlohmann::ordered_json;

ojson entry(const Rational& q) {
  return ojson::parse(json_entry(q));
}

ojson basis(const Subspace& u) {
  ojson out = ojson::array();
  for (Index k = 0; k < u.dim(); ++k) {
    ojson v = ojson::array();
    for (Index i = 0; i < u.ambient_dim(); ++i) v.push_back(entry(u.basis()(i, k)));
    out.push_back(std::move(v));
  }
  return out;
}

ojson pairs(const PairMap& bar, const PairMap& tilde, const char* sub, const char* sup) {
  ojson out = ojson::array();
  for (const auto& [key, value] : bar) {
    out.push_back({{sub, key.first}, {sup, key.second}, {"bar", basis(value)},
                   {"tilde", basis(tilde.at(key))}});
  }
  return out;
}

std::vector<std::pair<std::string, Subspace>> reach_chain(const AnalysisReport& r) {
  const Index n = r.system.n().total();
  const ReachabilityProfile& p = r.reachability;
  return {{"{0}", Subspace(n)}, {"R̄", p.bar_total}, {"R°", p.circ_total}, {"R", p.R},
          {"R̃", p.tilde_total}, {"X", Subspace::whole(n)}};
}

std::vector<std::pair<std::string, Subspace>> obs_chain(const AnalysisReport& r) {
  const Index n = r.system.n().total();
  const ObservabilityProfile& p = r.observability;
  return {{"{0}", Subspace(n)}, {"N̄", p.bar_total}, {"N", p.N}, {"N°", p.circ_total},
          {"Ñ", p.tilde_total}, {"X", Subspace::whole(n)}};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

AnalysisReport analyze(const PosetCausalSystem& sys, bool with_duality) {
  require_valid(sys);
  AnalysisReport r;
  r.system = sys;
  r.reachability = reachability_profile(sys);
  r.observability = observability_profile(sys);
  r.observability_routes_agree = observability_profile_via_duality(sys) == r.observability;
  if (with_duality) r.duality = verify_duality(sys);
  r.kalman = kalman(sys);
  for (ReductionVariant v : {ReductionVariant::primal, ReductionVariant::dual_tilde,
                             ReductionVariant::dual_circ}) {
    r.reductions.push_back(poset_reduce(sys, v));
  }
  return r;
}

bool consistent(const AnalysisReport& report) {
  if (!report.observability_routes_agree) return false;
  if (report.duality && !report.duality->all_passed) return false;
  for (const ReducedSystem& red : report.reductions) {
    if (!red.moments_preserved) return false;
  }
  return true;
}

std::string inclusion_chain(const std::vector<std::pair<std::string, Subspace>>& chain) {
  std::string out;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (k > 0) {
      const Subspace &a = chain[k - 1].second, &b = chain[k].second;
      out += !contains(b, a) ? " ⊄ " : (a == b ? " = " : " ⊊ ");
    }
    out += chain[k].first;
  }
  return out;
}

std::string render_json(const AnalysisReport& r) {
  const PosetCausalSystem& sys = r.system;
  const int p = sys.p();
  ojson doc;

  ojson edges = ojson::array();
  for (const auto& [j, i] : hasse_edges(sys.poset)) edges.push_back({j, i});
  doc["system"] = {{"p", p},
                   {"hasse_edges", edges},
                   {"n", sys.n().sizes()},
                   {"m", sys.m().sizes()},
                   {"r", sys.r().sizes()}};

  const ReachabilityProfile& rp = r.reachability;
  ojson reach;
  reach["R"] = basis(rp.R);
  reach["downstream"] = ojson::array();
  for (int i = 1; i <= p; ++i) {
    reach["downstream"].push_back({{"node", i}, {"basis", basis(rp.downstream[i - 1])}});
  }
  reach["pairs"] = pairs(rp.bar_pair, rp.tilde_pair, "i", "j");
  reach["nodes"] = ojson::array();
  for (int j = 1; j <= p; ++j) {
    reach["nodes"].push_back({{"node", j},
                              {"bar", basis(rp.bar[j - 1])},
                              {"circ", basis(rp.circ[j - 1])},
                              {"tilde", basis(rp.tilde[j - 1])},
                              {"hat", basis(rp.hat[j - 1])}});
  }
  reach["aggregates"] = {{"bar", basis(rp.bar_total)},
                         {"circ", basis(rp.circ_total)},
                         {"tilde", basis(rp.tilde_total)},
                         {"hat", basis(rp.hat_total)}};
  reach["chain"] = inclusion_chain(reach_chain(r));
  reach["flags"] = {{"controllable", rp.controllable},
                    {"independently_controllable", rp.independently_controllable},
                    {"weakly_upstream_controllable", rp.weakly_upstream_controllable},
                    {"weakly_locally_controllable", rp.weakly_locally_controllable}};
  doc["reachability"] = std::move(reach);

  const ObservabilityProfile& op = r.observability;
  ojson obs;
  obs["N"] = basis(op.N);
  obs["upstream"] = ojson::array();
  for (int i = 1; i <= p; ++i) {
    obs["upstream"].push_back({{"node", i}, {"basis", basis(op.upstream[i - 1])}});
  }
  obs["pairs"] = pairs(op.bar_pair, op.tilde_pair, "i", "j");
  obs["nodes"] = ojson::array();
  for (int j = 1; j <= p; ++j) {
    obs["nodes"].push_back({{"node", j},
                            {"bar", basis(op.bar[j - 1])},
                            {"circ", basis(op.circ[j - 1])},
                            {"tilde", basis(op.tilde[j - 1])}});
  }
  obs["aggregates"] = {{"bar", basis(op.bar_total)},
                       {"circ", basis(op.circ_total)},
                       {"tilde", basis(op.tilde_total)}};
  obs["chain"] = inclusion_chain(obs_chain(r));
  obs["flags"] = {{"observable", op.observable},
                  {"independently_observable", op.independently_observable},
                  {"weakly_downstream_observable", op.weakly_downstream_observable},
                  {"weakly_locally_observable", op.weakly_locally_observable}};
  obs["routes_agree"] = r.observability_routes_agree;
  doc["observability"] = std::move(obs);

  if (r.duality) {
    ojson checks = ojson::array();
    for (const IdentityCheck& c : r.duality->checks) {
      ojson item = {{"family", c.family}, {"identity", c.name}, {"passed", c.passed}};
      if (!c.passed && c.lhs) {
        item["lhs"] = basis(*c.lhs);
        item["rhs"] = basis(*c.rhs);
      }
      checks.push_back(std::move(item));
    }
    doc["duality"] = {{"all_passed", r.duality->all_passed},
                      {"count", r.duality->checks.size()},
                      {"failures", r.duality->failures()},
                      {"checks", std::move(checks)}};
  }

  ojson red;
  red["kalman"] = {{"co", basis(r.kalman.co)},
                   {"c_no", basis(r.kalman.c_no)},
                   {"nc_o", basis(r.kalman.nc_o)},
                   {"nc_no", basis(r.kalman.nc_no)}};
  red["variants"] = ojson::array();
  for (const ReducedSystem& rs : r.reductions) {
    ojson blocks = ojson::array();
    std::vector<Index> dims;
    for (int j = 1; j <= p; ++j) {
      blocks.push_back({{"node", j}, {"basis", basis(rs.blocks[j - 1])}});
      dims.push_back(rs.blocks[j - 1].dim());
    }
    red["variants"].push_back({{"variant", to_string(rs.variant)},
                               {"block_dims", dims},
                               {"dim", rs.subspace.dim()},
                               {"blocks", std::move(blocks)},
                               {"moment_horizon", rs.horizon},
                               {"moments_preserved", rs.moments_preserved},
                               {"contains_xco", rs.contains_xco},
                               {"optimality_hypothesis", rs.optimality_hypothesis}});
  }
  doc["reduction"] = std::move(red);
  return doc.dump(2) + "\n";
}

std::string render_text(const AnalysisReport& r) {
  const PosetCausalSystem& sys = r.system;
  const int p = sys.p();
  std::ostringstream out;
  out << "system: p = " << p << ", states " << sys.n().total() << ", inputs "
      << sys.m().total() << ", outputs " << sys.r().total() << "\n";
  out << "hasse edges:";
  for (const auto& [j, i] : hasse_edges(sys.poset)) out << " " << j << "⪰" << i;
  out << "\n\nreachability\n";
  const ReachabilityProfile& rp = r.reachability;
  out << "  R   = " << to_span_string(rp.R) << "\n";
  for (int i = 1; i <= p; ++i) {
    out << "  R_" << i << " = " << to_span_string(rp.downstream[i - 1]) << "\n";
  }
  for (int j = 1; j <= p; ++j) {
    out << "  node " << j << ": R̄ = " << to_span_string(rp.bar[j - 1])
        << ", R° = " << to_span_string(rp.circ[j - 1])
        << ", R̃ = " << to_span_string(rp.tilde[j - 1])
        << ", R̂ = " << to_span_string(rp.hat[j - 1]) << "\n";
  }
  out << "  R̄ = " << to_span_string(rp.bar_total) << "\n";
  out << "  R° = " << to_span_string(rp.circ_total) << "\n";
  out << "  R̃ = " << to_span_string(rp.tilde_total) << "\n";
  out << "  R̂ = " << to_span_string(rp.hat_total) << "\n";
  out << "  chain: " << inclusion_chain(reach_chain(r)) << "\n";
  out << "  controllable: " << yes_no(rp.controllable)
      << ", independently controllable: " << yes_no(rp.independently_controllable)
      << ", weakly upstream controllable: " << yes_no(rp.weakly_upstream_controllable)
      << ", weakly locally controllable: " << yes_no(rp.weakly_locally_controllable) << "\n";

  out << "\nobservability\n";
  const ObservabilityProfile& op = r.observability;
  out << "  N   = " << to_span_string(op.N) << "\n";
  for (int i = 1; i <= p; ++i) {
    out << "  N_" << i << " = " << to_span_string(op.upstream[i - 1]) << "\n";
  }
  for (int j = 1; j <= p; ++j) {
    out << "  node " << j << ": N̄ = " << to_span_string(op.bar[j - 1])
        << ", N° = " << to_span_string(op.circ[j - 1])
        << ", Ñ = " << to_span_string(op.tilde[j - 1]) << "\n";
  }
  out << "  N̄ = " << to_span_string(op.bar_total) << "\n";
  out << "  N° = " << to_span_string(op.circ_total) << "\n";
  out << "  Ñ = " << to_span_string(op.tilde_total) << "\n";
  out << "  chain: " << inclusion_chain(obs_chain(r)) << "\n";
  out << "  observable: " << yes_no(op.observable)
      << ", independently observable: " << yes_no(op.independently_observable)
      << ", weakly downstream observable: " << yes_no(op.weakly_downstream_observable)
      << ", weakly locally observable: " << yes_no(op.weakly_locally_observable) << "\n";
  out << "  direct and dual routes agree: " << yes_no(r.observability_routes_agree) << "\n";

  if (r.duality) {
    out << "\nduality: " << r.duality->checks.size() - r.duality->failures() << "/"
        << r.duality->checks.size() << " identities hold\n";
    for (const IdentityCheck& c : r.duality->checks) {
      if (c.passed) continue;
      out << "  FAILED " << c.name;
      if (c.lhs) out << ": " << to_span_string(*c.lhs) << " vs " << to_span_string(*c.rhs);
      out << "\n";
    }
  }

  out << "\nreduction\n";
  out << "  X_co = " << to_span_string(r.kalman.co) << "\n";
  for (const ReducedSystem& rs : r.reductions) {
    out << "  " << to_string(rs.variant) << ": dim " << rs.subspace.dim() << " (";
    for (int j = 1; j <= p; ++j) out << (j > 1 ? ", " : "") << rs.blocks[j - 1].dim();
    out << "), " << to_span_string(rs.subspace) << ", moments up to k = " << rs.horizon
        << (rs.moments_preserved ? " preserved" : " NOT preserved")
        << ", contains X_co: " << yes_no(rs.contains_xco) << "\n";
  }
  return out.str();
}

}  // namespace posetsys
