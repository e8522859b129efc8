#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetsys/duality.hpp"
#include "posetsys/observability.hpp"
#include "posetsys/reachability.hpp"
#include "posetsys/reduction.hpp"
#include "posetsys/system.hpp"

namespace posetsys {

struct AnalysisReport {
  PosetCausalSystem system;
  ReachabilityProfile reachability;
  ObservabilityProfile observability;
  bool observability_routes_agree = false;
  std::optional<DualityReport> duality;
  KalmanDecomposition kalman;
  std::vector<ReducedSystem> reductions;  // primal, dual-tilde, dual-circ
};

AnalysisReport analyze(const PosetCausalSystem& sys, bool with_duality = true);

// True when every cross-check inside the report holds: both observability
// routes agree, all duality identities pass and every reduction preserves
// the moments.
bool consistent(const AnalysisReport& report);

// "{0} ⊊ R̄ ⊊ R° = R ⊊ X": each pair of neighbours is joined by "=" or "⊊",
// or "⊄" if the left one is not contained in the right one.
std::string inclusion_chain(const std::vector<std::pair<std::string, Subspace>>& chain);

std::string render_json(const AnalysisReport& report);
std::string render_text(const AnalysisReport& report);

}  // namespace posetsys
