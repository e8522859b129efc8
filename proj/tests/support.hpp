#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "posetsys/blockmat.hpp"
#include "posetsys/poset.hpp"
#include "posetsys/subspace.hpp"
#include "posetsys/sim.hpp"
#include "posetsys/system.hpp"

namespace posetsys::testing {

using Entry = std::tuple<int, int, int>;  // 1-based row, column, value

QMatrix sparse(Index rows, Index cols, std::initializer_list<Entry> entries);
QMatrix dense(std::initializer_list<std::initializer_list<int>> rows);
Subspace span_of(const std::string& text, Index ambient);

// Posets of the worked examples.
Poset four_node_poset();
Poset poset_p(int k);  // k = 1..6
Poset chain(int p);
Poset antichain(int p);

// Systems of the worked examples, entered from the printed matrices.
PosetCausalSystem large_example();      // over P4, (A, B, 0, 0)
PosetCausalSystem obs_example();        // over P4, (A, 0, C, 0)
PosetCausalSystem large_obs_example();  // over P4, (A, B, C, 0)
PosetCausalSystem two_node_hat();
PosetCausalSystem chain_placement();
PosetCausalSystem invariance_example();  // P6, A R̃ not inside R̃
PosetCausalSystem non_optimal();

// Random generation.
Poset random_poset(int p, double edge_probability, std::mt19937_64& rng);
Partition random_partition(int p, int max_size, bool allow_zero, std::mt19937_64& rng);

struct SystemShape {
  int max_state = 3;
  int max_input = 2;
  int max_output = 2;
  bool allow_zero_blocks = true;
  int lo = -3, hi = 3;
  double density = 0.6;
};
PosetCausalSystem random_system(const Poset& poset, const SystemShape& shape,
                                std::mt19937_64& rng);

// Every local pair (A_ii, B_ii) controllable, coupling blocks random.
PosetCausalSystem random_locally_controllable(const Poset& poset, std::mt19937_64& rng);
// Every local pair (C_ii, A_ii) observable, coupling blocks random.
PosetCausalSystem random_locally_observable(const Poset& poset, std::mt19937_64& rng);

// Structured subspace ⊕ Q_j with Q_j a random subspace of `inside` ∩ X_j.
Subspace random_structured_subspace(const Partition& n, const Subspace& inside,
                                    std::mt19937_64& rng);
Subspace random_subspace(Index ambient, Index max_dim, std::mt19937_64& rng);

// Piecewise-constant input with entries uniform in [-1, 1].
InputSignal random_input(Index inputs, double h, Index steps, std::mt19937_64& rng);
Eigen::VectorXd random_vector(Index size, std::mt19937_64& rng);
// Euclidean distance from x to the subspace u.
double distance_to(const Subspace& u, const Eigen::VectorXd& x);

// Independent oracles: textbook elimination without pivots reuse, Laplace
// determinants and brute-force relations.
Index oracle_rank(QMatrix m);
bool oracle_same_span(const QMatrix& u, const QMatrix& v);
bool oracle_span_contains(const QMatrix& big, const QMatrix& small);
Rational oracle_det(const QMatrix& m);
QMatrix oracle_ctrb(const QMatrix& A, const QMatrix& B);
std::vector<std::vector<bool>> oracle_closure(int p, const std::vector<Edge>& edges);

}  // namespace posetsys::testing
