#include "posetsys/system.hpp"

#include "posetsys/errors.hpp"
#include "posetsys/linalg.hpp"

namespace posetsys {
namespace {

void check_parts(const Partition& part, const char* name, int p) {
  if (part.parts() != p) {
    throw ShapeMismatch(std::string("partition ") + name + " has " +
                        std::to_string(part.parts()) + " parts, poset has " +
                        std::to_string(p));
  }
}

QBlockMatrix shaped(QMatrix m, const Partition& rows, const Partition& cols,
                    const char* name) {
  if (m.rows() != rows.total() || m.cols() != cols.total()) {
    throw ShapeMismatch(std::string(name) + " is " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + ", expected " +
                        std::to_string(rows.total()) + "x" + std::to_string(cols.total()));
  }
  return QBlockMatrix(std::move(m), rows, cols);
}

}  // namespace

PosetCausalSystem make_system(Poset poset, const Partition& n, const Partition& m,
                              const Partition& r, QMatrix A, QMatrix B, QMatrix C,
                              QMatrix D, std::optional<QVector> x0) {
  const int p = poset.size();
  check_parts(n, "n", p);
  check_parts(m, "m", p);
  check_parts(r, "r", p);
  PosetCausalSystem sys;
  sys.poset = std::move(poset);
  sys.A = shaped(std::move(A), n, n, "A");
  sys.B = shaped(std::move(B), n, m, "B");
  sys.C = shaped(std::move(C), r, n, "C");
  sys.D = shaped(std::move(D), r, m, "D");
  if (x0 && x0->size() != n.total()) {
    throw ShapeMismatch("x0 has length " + std::to_string(x0->size()) + ", expected " +
                        std::to_string(n.total()));
  }
  sys.x0 = std::move(x0);
  return sys;
}

ValidationReport validate(const PosetCausalSystem& sys) {
  ValidationReport report;
  const std::pair<const char*, const QBlockMatrix*> mats[] = {
      {"A", &sys.A}, {"B", &sys.B}, {"C", &sys.C}, {"D", &sys.D}};
  for (const auto& [name, mat] : mats) {
    for (const auto& [i, j] : incidence_violations(*mat, sys.poset)) {
      report.violations.push_back({name, i, j});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

void require_valid(const PosetCausalSystem& sys) {
  const ValidationReport report = validate(sys);
  if (!report.ok) {
    const BlockViolation& v = report.violations.front();
    throw ValidationError("block (" + std::to_string(v.i) + "," + std::to_string(v.j) +
                          ") of " + v.matrix + " must be zero");
  }
}

PosetCausalSystem dual_system(const PosetCausalSystem& sys) {
  PosetCausalSystem d;
  d.poset = dual_poset(sys.poset);
  d.A = sys.A.transpose();
  d.B = sys.C.transpose();
  d.C = sys.B.transpose();
  d.D = sys.D.transpose();
  d.x0 = sys.x0;
  return d;
}

StateSpace state_space(const PosetCausalSystem& sys) {
  return {sys.A.entries(), sys.B.entries(), sys.C.entries(), sys.D.entries()};
}

DerivedSystem derived(const PosetCausalSystem& sys, DerivedKind kind, int i) {
  DerivedSystem out;
  out.kind = kind;
  if (kind == DerivedKind::global) {
    out.model = state_space(sys);
    out.state_blocks = out.input_blocks = out.output_blocks = sys.poset.all();
    return out;
  }
  if (i < 1 || i > sys.p()) {
    throw IndexOutOfRange("node " + std::to_string(i) + " outside 1.." +
                          std::to_string(sys.p()));
  }
  out.node = i;
  const NodeSet self{i};
  switch (kind) {
    case DerivedKind::local:
      out.state_blocks = out.input_blocks = out.output_blocks = self;
      break;
    case DerivedKind::downstream:
      out.state_blocks = out.output_blocks = down(sys.poset, i);
      out.input_blocks = self;
      break;
    case DerivedKind::upstream:
      out.state_blocks = out.input_blocks = up(sys.poset, i);
      out.output_blocks = self;
      break;
    case DerivedKind::global:
      break;
  }
  out.model.A = compress(sys.A, out.state_blocks, out.state_blocks).entries();
  out.model.B = compress(sys.B, out.state_blocks, out.input_blocks).entries();
  out.model.C = compress(sys.C, out.output_blocks, out.state_blocks).entries();
  out.model.D = compress(sys.D, out.output_blocks, out.input_blocks).entries();
  return out;
}

QBlockMatrix transfer_eval(const PosetCausalSystem& sys, const Rational& s) {
  QMatrix resolvent = -sys.A.entries();
  resolvent.diagonal().array() += s;
  QMatrix x;
  try {
    x = solve(resolvent, sys.B.entries());
  } catch (const SingularMatrix&) {
    throw SingularResolvent("s = " + to_string(s) + " is an eigenvalue of A");
  }
  QBlockMatrix f(sys.D.entries() + sys.C.entries() * x, sys.r(), sys.m());
  if (!is_incident(f, sys.poset)) {
    throw StructureViolation("transfer matrix left the incidence space");
  }
  return f;
}

}  // namespace posetsys
