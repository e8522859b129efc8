#include "posetsys/reachability.hpp"

#include <random>
#include <string>

#include "posetsys/linalg.hpp"

namespace posetsys {

Subspace reachable_subspace(const QMatrix& A, const QMatrix& B) {
  if (A.rows() != A.cols() || B.rows() != A.rows()) {
    throw ShapeMismatch("reachable_subspace: A must be square with as many rows as B");
  }
  Subspace v = image(B);
  while (true) {
    Subspace next = sum(v, apply(A, v));
    if (next.dim() == v.dim()) return v;
    v = std::move(next);
  }
}

Subspace reachable(const PosetCausalSystem& sys) {
  return reachable_subspace(sys.A.entries(), sys.B.entries());
}

Subspace downstream_reachable(const PosetCausalSystem& sys, int i) {
  const DerivedSystem ds = derived(sys, DerivedKind::downstream, i);
  return embed(reachable_subspace(ds.model.A, ds.model.B), sys.n(), ds.state_blocks);
}

ReachabilityProfile reachability_profile(const PosetCausalSystem& sys) {
  const Partition& n = sys.n();
  const Index total = n.total();
  const int p = sys.p();
  ReachabilityProfile pr;
  pr.R = reachable(sys);
  std::vector<Subspace> x;
  for (int j = 1; j <= p; ++j) {
    x.push_back(coordinate_subspace(n, {j}));
    pr.downstream.push_back(downstream_reachable(sys, j));
  }
  for (int j = 1; j <= p; ++j) {
    for (int i : down(sys.poset, j)) {
      pr.bar_pair[{i, j}] = intersect(x[i - 1], pr.downstream[j - 1]);
      pr.tilde_pair[{i, j}] = coordinate_project(pr.downstream[j - 1], n, {i});
    }
  }
  for (int j = 1; j <= p; ++j) {
    std::vector<Subspace> bars, tildes;
    for (int i : up(sys.poset, j)) {
      bars.push_back(pr.bar_pair.at({j, i}));
      tildes.push_back(pr.tilde_pair.at({j, i}));
    }
    pr.bar.push_back(sum(bars, total));
    pr.tilde.push_back(sum(tildes, total));
    pr.circ.push_back(intersect(x[j - 1], pr.R));
    pr.hat.push_back(pr.tilde_pair.at({j, j}));
    if (pr.tilde.back() != coordinate_project(pr.R, n, {j})) {
      throw CrossCheckFailure("R̃_" + std::to_string(j) + " differs from P_X" +
                              std::to_string(j) + " R");
    }
  }
  if (sum(pr.downstream, total) != pr.R) {
    throw CrossCheckFailure("R differs from the sum of the downstream reachable sets");
  }
  pr.bar_total = sum(pr.bar, total);
  pr.circ_total = sum(pr.circ, total);
  pr.tilde_total = sum(pr.tilde, total);
  pr.hat_total = sum(pr.hat, total);
  const Subspace all = Subspace::whole(total);
  pr.controllable = pr.R == all;
  pr.independently_controllable = pr.bar_total == all;
  pr.weakly_upstream_controllable = pr.tilde_total == all;
  pr.weakly_locally_controllable = true;
  for (int j = 1; j <= p; ++j) {
    if (pr.hat[j - 1] != x[j - 1]) pr.weakly_locally_controllable = false;
  }
  return pr;
}

LocalControllability weakly_locally_controllable(const PosetCausalSystem& sys) {
  LocalControllability out;
  for (int i = 1; i <= sys.p(); ++i) {
    const DerivedSystem local = derived(sys, DerivedKind::local, i);
    const Index r = rank(ctrb_matrix(local.model.A, local.model.B));
    out.local_rank.push_back(r);
    out.controllable.push_back(r == sys.n().size(i));
    out.all = out.all && out.controllable.back();
  }
  return out;
}

FactoredCharPoly char_poly_factored(const QBlockMatrix& A, const Poset& poset) {
  if (!(A.row_partition() == A.col_partition())) {
    throw IncompatibleShapes("char_poly_factored needs a square partition");
  }
  if (!is_incident(A, poset)) throw StructureViolation("A is not structured");
  FactoredCharPoly out;
  out.product = Polynomial{Rational(1)};
  for (int i = 1; i <= poset.size(); ++i) {
    out.blocks.push_back(char_poly(QMatrix(A.block(i, i))));
    out.product = out.product * out.blocks.back();
  }
  if (out.product != char_poly(A.entries())) {
    throw CrossCheckFailure("product of block characteristic polynomials differs from "
                            "det(sI - A)");
  }
  return out;
}

namespace {

bool controllable_pair(const QMatrix& A, const QMatrix& B) {
  return rank(ctrb_matrix(A, B)) == A.rows();
}

// Ackermann: f = -e_n^T ctrb(A, b)^{-1} p(A), so that char(A + b f) = p.
QMatrix ackermann(const QMatrix& A, const QMatrix& b, const Polynomial& target) {
  const QMatrix ctrb = ctrb_matrix(A, b);
  const QMatrix last_row = inverse(ctrb).bottomRows(1);
  return -(last_row * target(A));
}

}  // namespace

QMatrix place_poles(const QMatrix& A, const QMatrix& B, const Polynomial& target,
                    std::uint64_t seed) {
  const Index n = A.rows(), m = B.cols();
  if (A.cols() != n || B.rows() != n) throw ShapeMismatch("place_poles: shapes");
  if (target.degree() != n || !target.is_monic()) {
    throw DimensionMismatch("target must be monic of degree " + std::to_string(n));
  }
  if (n == 0) return QMatrix::Zero(m, 0);
  if (!controllable_pair(A, B)) throw SingularMatrix("pair (A, B) is not controllable");
  if (m == 1) return ackermann(A, B, target);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(-2, 2);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    QMatrix k0 = QMatrix::Zero(m, n);
    QMatrix g = QMatrix::Zero(m, 1);
    if (attempt > 0) k0 = k0.unaryExpr([&](const Rational&) { return Rational(pick(rng)); });
    g = g.unaryExpr([&](const Rational&) { return Rational(pick(rng)); });
    const QMatrix a1 = A + B * k0;
    const QMatrix b1 = B * g;
    if (!controllable_pair(a1, b1)) continue;
    return k0 + g * ackermann(a1, b1, target);
  }
  throw SingularMatrix("no single-input reduction found");
}

QBlockMatrix pole_place(const PosetCausalSystem& sys, const std::vector<Polynomial>& targets,
                        std::uint64_t seed) {
  const int p = sys.p();
  if (static_cast<int>(targets.size()) != p) {
    throw DimensionMismatch("expected " + std::to_string(p) + " target polynomials");
  }
  for (int i = 1; i <= p; ++i) {
    const Polynomial& t = targets[i - 1];
    if (t.degree() != sys.n().size(i) || !t.is_monic()) {
      throw DimensionMismatch("target " + std::to_string(i) + " must be monic of degree " +
                              std::to_string(sys.n().size(i)));
    }
  }
  const LocalControllability local = weakly_locally_controllable(sys);
  for (int i = 1; i <= p; ++i) {
    if (!local.controllable[i - 1]) {
      throw NotWeaklyLocallyControllable(
          i, "local pair (A_" + std::to_string(i) + std::to_string(i) + ", B_" +
                 std::to_string(i) + std::to_string(i) + ") is not controllable");
    }
  }
  QMatrix f = QMatrix::Zero(sys.m().total(), sys.n().total());
  for (int i = 1; i <= p; ++i) {
    const QMatrix aii = sys.A.block(i, i), bii = sys.B.block(i, i);
    f.block(sys.m().offset(i), sys.n().offset(i), sys.m().size(i), sys.n().size(i)) =
        place_poles(aii, bii, targets[i - 1], seed + static_cast<std::uint64_t>(i));
  }
  QBlockMatrix F(std::move(f), sys.m(), sys.n());
  const QBlockMatrix closed(sys.A.entries() + sys.B.entries() * F.entries(), sys.n(),
                            sys.n());
  Polynomial expected{Rational(1)};
  for (const Polynomial& t : targets) expected = expected * t;
  const FactoredCharPoly got = char_poly_factored(closed, sys.poset);
  for (int i = 1; i <= p; ++i) {
    if (got.blocks[i - 1] != targets[i - 1]) {
      throw CrossCheckFailure("block " + std::to_string(i) + " missed its target");
    }
  }
  if (got.product != expected) throw CrossCheckFailure("closed loop missed the target");
  return F;
}

}  // namespace posetsys
