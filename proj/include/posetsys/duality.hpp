#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posetsys/observability.hpp"
#include "posetsys/reachability.hpp"
#include "posetsys/system.hpp"

namespace posetsys {

struct IdentityCheck {
  std::string family;  // "aggregate", "per-node", "per-pair", "classical", ...
  std::string name;    // e.g. "(R̄_2)^d = X_2 ⊖ Ñ^2"
  bool passed = false;
  // Present for subspace identities; both sides in global coordinates.
  std::optional<Subspace> lhs, rhs;
};

struct DualityReport {
  std::vector<IdentityCheck> checks;
  bool all_passed = true;
  std::size_t failures() const;
};

// Every identity is evaluated from two independently computed sides: the
// profiles of the dual system against the profiles of the primal one.
DualityReport verify_duality(const PosetCausalSystem& sys);

}  // namespace posetsys
