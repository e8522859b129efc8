#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posetsys/blockmat.hpp"
#include "posetsys/poset.hpp"
#include "posetsys/rational.hpp"

namespace posetsys {

// Unstructured state-space model (A, B, C, D).
struct StateSpace {
  QMatrix A, B, C, D;
  Index states() const { return A.rows(); }
  Index inputs() const { return B.cols(); }
  Index outputs() const { return C.rows(); }
};

struct PosetCausalSystem {
  Poset poset;
  QBlockMatrix A, B, C, D;
  std::optional<QVector> x0;

  const Partition& n() const { return A.row_partition(); }
  const Partition& m() const { return B.col_partition(); }
  const Partition& r() const { return C.row_partition(); }
  int p() const { return poset.size(); }

  friend bool operator==(const PosetCausalSystem& a, const PosetCausalSystem& b) {
    return a.poset == b.poset && a.A == b.A && a.B == b.B && a.C == b.C && a.D == b.D &&
           a.x0 == b.x0;
  }
};

// Checks every shape against the partitions; does not check structure.
// Throws ShapeMismatch.
PosetCausalSystem make_system(Poset poset, const Partition& n, const Partition& m,
                              const Partition& r, QMatrix A, QMatrix B, QMatrix C,
                              QMatrix D, std::optional<QVector> x0 = std::nullopt);

struct BlockViolation {
  std::string matrix;  // "A", "B", "C" or "D"
  int i = 0, j = 0;
};

struct ValidationReport {
  bool ok = true;
  std::vector<BlockViolation> violations;
};

ValidationReport validate(const PosetCausalSystem& sys);
// Throws ValidationError naming the first violating block.
void require_valid(const PosetCausalSystem& sys);

// (A^T, C^T, B^T, D^T) over the dual poset.
PosetCausalSystem dual_system(const PosetCausalSystem& sys);

StateSpace state_space(const PosetCausalSystem& sys);

enum class DerivedKind { global, local, downstream, upstream };

struct DerivedSystem {
  DerivedKind kind = DerivedKind::global;
  int node = 0;
  StateSpace model;
  // Block labels behind the compressed state/input/output coordinates.
  NodeSet state_blocks, input_blocks, output_blocks;
};

// Throws IndexOutOfRange unless 1 <= i <= p (ignored for global).
DerivedSystem derived(const PosetCausalSystem& sys, DerivedKind kind, int i = 0);

// D + C (sI - A)^{-1} B. Throws SingularResolvent when s is an eigenvalue of
// A and StructureViolation if the result leaves the incidence space.
QBlockMatrix transfer_eval(const PosetCausalSystem& sys, const Rational& s);

}  // namespace posetsys
