#include "posetsys/sim.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "posetsys/errors.hpp"

namespace posetsys {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

VectorXd gather(const VectorXd& v, const std::vector<Index>& idx) {
  VectorXd out(static_cast<Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) out(static_cast<Index>(k)) = v(idx[k]);
  return out;
}

// Block i of a vector living on the compressed coordinates of S.
VectorXd block_of(const VectorXd& v, const Partition& full, const NodeSet& s, int i) {
  const Partition part = full.restricted(s);
  return v.segment(part.offset(i), part.size(i));
}

double deviation(const VectorXd& a, const VectorXd& b) {
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

class Tracker {
 public:
  explicit Tracker(std::string name) { d_.name = std::move(name); }
  void update(double dev) { d_.max_deviation = std::max(d_.max_deviation, dev); }
  IdentityDeviation finish(double tol) {
    d_.passed = d_.max_deviation < tol;
    return d_;
  }

 private:
  IdentityDeviation d_;
};

}  // namespace

LtiModel to_double(const StateSpace& model) {
  return {to_double(model.A), to_double(model.B), to_double(model.C), to_double(model.D)};
}

MatrixXd expm(const MatrixXd& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("expm of a non-square matrix");
  if (!m.allFinite()) throw NonFinite("expm input has non-finite entries");
  if (m.size() == 0) return m;
  return m.exp();
}

Trajectory simulate(const LtiModel& model, const VectorXd& x0, const InputSignal& u) {
  const Index n = model.A.rows(), m = model.B.cols();
  if (model.A.cols() != n || model.B.rows() != n || model.C.cols() != n ||
      model.D.rows() != model.C.rows() || model.D.cols() != m) {
    throw DimensionMismatch("inconsistent model shapes");
  }
  if (x0.size() != n) throw DimensionMismatch("x0 does not match the state dimension");
  for (const VectorXd& uk : u.values) {
    if (uk.size() != m) throw DimensionMismatch("input does not match the input dimension");
  }
  MatrixXd aug = MatrixXd::Zero(n + m, n + m);
  aug.topLeftCorner(n, n) = model.A * u.h;
  aug.topRightCorner(n, m) = model.B * u.h;
  const MatrixXd e = expm(aug);
  const MatrixXd phi = e.topLeftCorner(n, n);
  const MatrixXd gamma = e.topRightCorner(n, m);

  Trajectory tr;
  tr.h = u.h;
  tr.states.push_back(x0);
  for (const VectorXd& uk : u.values) {
    const VectorXd& xk = tr.states.back();
    tr.outputs.push_back(model.C * xk + model.D * uk);
    tr.states.push_back(phi * xk + gamma * uk);
  }
  return tr;
}

Trajectory simulate(const PosetCausalSystem& sys, const VectorXd& x0, const InputSignal& u) {
  return simulate(to_double(state_space(sys)), x0, u);
}

Trajectory simulate(const DerivedSystem& sys, const VectorXd& x0, const InputSignal& u) {
  return simulate(to_double(sys.model), x0, u);
}

InputSignal restrict_input(const InputSignal& u, const Partition& m, const NodeSet& s) {
  InputSignal out;
  out.h = u.h;
  const std::vector<Index> idx = m.coordinates(s);
  for (const VectorXd& uk : u.values) out.values.push_back(gather(uk, idx));
  return out;
}

TrajectoryReport verify_trajectory_decomposition(const PosetCausalSystem& sys,
                                                 const VectorXd& x0, const InputSignal& u,
                                                 double tolerance) {
  const Partition &n = sys.n(), &m = sys.m(), &r = sys.r();
  const int p = sys.p();
  const Index steps = u.steps();
  const Trajectory global = simulate(sys, x0, u);

  std::vector<Trajectory> downstream, local;
  std::vector<NodeSet> downs;
  for (int i = 1; i <= p; ++i) {
    const DerivedSystem ds = derived(sys, DerivedKind::downstream, i);
    const DerivedSystem ls = derived(sys, DerivedKind::local, i);
    const InputSignal ui = restrict_input(u, m, {i});
    const VectorXd xi0 = gather(x0, n.coordinates({i}));
    // x̃_{0,i} = I(↓i, i) x_{i,0}.
    VectorXd xt0 = VectorXd::Zero(static_cast<Index>(n.coordinates(ds.state_blocks).size()));
    xt0.segment(n.restricted(ds.state_blocks).offset(i), n.size(i)) = xi0;
    downstream.push_back(simulate(ds, xt0, ui));
    local.push_back(simulate(ls, xi0, ui));
    downs.push_back(ds.state_blocks);
  }

  Tracker sum_x("x = Σ_i I(:,↓i) x^↓i"), sum_y("y = Σ_i I(:,↓i) y^↓i");
  Tracker loc_x("x^↓i_i = x^i"), loc_y("y^↓i_i = y^i");
  Tracker part_x("x_i = x^i + Σ_{j∈⇑i} x^↓j_i"), part_y("y_i = y^i + Σ_{j∈⇑i} y^↓j_i");
  Tracker up_x("x^↑i = I(↑i,:) x"), up_y("y^↑i = y_i");

  for (Index k = 0; k <= steps; ++k) {
    const bool has_output = k < steps;
    VectorXd xs = VectorXd::Zero(n.total()), ys = VectorXd::Zero(r.total());
    for (int i = 1; i <= p; ++i) {
      const std::vector<Index> xi = n.coordinates(downs[i - 1]);
      for (std::size_t a = 0; a < xi.size(); ++a) {
        xs(xi[a]) += downstream[i - 1].states[k](static_cast<Index>(a));
      }
      if (has_output) {
        const std::vector<Index> yi = r.coordinates(downs[i - 1]);
        for (std::size_t a = 0; a < yi.size(); ++a) {
          ys(yi[a]) += downstream[i - 1].outputs[k](static_cast<Index>(a));
        }
      }
    }
    sum_x.update(deviation(global.states[k], xs));
    if (has_output) sum_y.update(deviation(global.outputs[k], ys));

    for (int i = 1; i <= p; ++i) {
      loc_x.update(deviation(block_of(downstream[i - 1].states[k], n, downs[i - 1], i),
                             local[i - 1].states[k]));
      VectorXd xi = local[i - 1].states[k];
      for (int j : strict_up(sys.poset, i)) {
        xi += block_of(downstream[j - 1].states[k], n, downs[j - 1], i);
      }
      part_x.update(deviation(gather(global.states[k], n.coordinates({i})), xi));
      if (has_output) {
        loc_y.update(deviation(block_of(downstream[i - 1].outputs[k], r, downs[i - 1], i),
                               local[i - 1].outputs[k]));
        VectorXd yi = local[i - 1].outputs[k];
        for (int j : strict_up(sys.poset, i)) {
          yi += block_of(downstream[j - 1].outputs[k], r, downs[j - 1], i);
        }
        part_y.update(deviation(gather(global.outputs[k], r.coordinates({i})), yi));
      }
    }
  }

  for (int i = 1; i <= p; ++i) {
    const DerivedSystem us = derived(sys, DerivedKind::upstream, i);
    const std::vector<Index> idx = n.coordinates(us.state_blocks);
    const Trajectory tu =
        simulate(us, gather(x0, idx), restrict_input(u, m, us.input_blocks));
    for (Index k = 0; k <= steps; ++k) {
      up_x.update(deviation(tu.states[k], gather(global.states[k], idx)));
      if (k < steps) {
        up_y.update(deviation(tu.outputs[k], gather(global.outputs[k], r.coordinates({i}))));
      }
    }
  }

  TrajectoryReport report;
  report.tolerance = tolerance;
  for (Tracker* t : {&sum_x, &sum_y, &loc_x, &loc_y, &part_x, &part_y, &up_x, &up_y}) {
    report.checks.push_back(t->finish(tolerance));
    report.max_deviation = std::max(report.max_deviation, report.checks.back().max_deviation);
    report.passed = report.passed && report.checks.back().passed;
  }
  return report;
}

}  // namespace posetsys
