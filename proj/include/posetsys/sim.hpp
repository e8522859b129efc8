#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "posetsys/system.hpp"

namespace posetsys {

struct LtiModel {
  Eigen::MatrixXd A, B, C, D;
};

LtiModel to_double(const StateSpace& model);

// Scaling and squaring with a Padé core. Throws NonFinite on NaN/Inf input
// and ShapeMismatch for non-square input.
Eigen::MatrixXd expm(const Eigen::MatrixXd& m);

// Piecewise-constant input: values[k] is held on [kh, (k+1)h).
struct InputSignal {
  double h = 0.0;
  std::vector<Eigen::VectorXd> values;
  Index steps() const { return static_cast<Index>(values.size()); }
};

struct Trajectory {
  double h = 0.0;
  std::vector<Eigen::VectorXd> states;   // x(kh), k = 0..T
  std::vector<Eigen::VectorXd> outputs;  // y(kh) = C x_k + D u_k, k = 0..T-1
};

// Exact propagation for piecewise-constant inputs through one exponential
// of [[A, B], [0, 0]] h. Throws DimensionMismatch.
Trajectory simulate(const LtiModel& model, const Eigen::VectorXd& x0, const InputSignal& u);
Trajectory simulate(const PosetCausalSystem& sys, const Eigen::VectorXd& x0,
                    const InputSignal& u);
Trajectory simulate(const DerivedSystem& sys, const Eigen::VectorXd& x0,
                    const InputSignal& u);

// Components of u belonging to the blocks in S, in block order.
InputSignal restrict_input(const InputSignal& u, const Partition& m, const NodeSet& s);

struct IdentityDeviation {
  std::string name;
  double max_deviation = 0.0;
  bool passed = false;
};

struct TrajectoryReport {
  double tolerance = 0.0;
  std::vector<IdentityDeviation> checks;
  double max_deviation = 0.0;
  bool passed = true;
};

// Checks, at every grid point, that the global trajectory is the sum of the
// embedded downstream trajectories, that the i-th component of the i-th
// downstream trajectory is the local trajectory, that x_i is the local part
// plus the contributions of the strictly upstream nodes, and that each
// upstream system reproduces the matching components.
TrajectoryReport verify_trajectory_decomposition(const PosetCausalSystem& sys,
                                                 const Eigen::VectorXd& x0,
                                                 const InputSignal& u, double tolerance);

}  // namespace posetsys
