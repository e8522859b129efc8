#include "support.hpp"

#include <algorithm>
#include <numeric>

#include <Eigen/QR>

#include "posetsys/linalg.hpp"
#include "posetsys/random.hpp"

namespace posetsys::testing {
namespace {

PosetCausalSystem assemble(Poset poset, std::vector<Index> n, std::vector<Index> m,
                           std::vector<Index> r, QMatrix A, QMatrix B, QMatrix C) {
  const Partition pn(std::move(n)), pm(std::move(m)), pr(std::move(r));
  QMatrix D = QMatrix::Zero(pr.total(), pm.total());
  return make_system(std::move(poset), pn, pm, pr, std::move(A), std::move(B), std::move(C),
                     std::move(D), std::nullopt);
}

QMatrix random_dense(Index rows, Index cols, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> value(lo, hi);
  QMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = value(rng);
  }
  return m;
}

void set_block(QMatrix& m, const Partition& rows, const Partition& cols, int i, int j,
               const QMatrix& block) {
  m.block(rows.offset(i), cols.offset(j), rows.size(i), cols.size(j)) = block;
}

}  // namespace

QMatrix sparse(Index rows, Index cols, std::initializer_list<Entry> entries) {
  QMatrix m = QMatrix::Zero(rows, cols);
  for (const auto& [i, j, v] : entries) m(i - 1, j - 1) = v;
  return m;
}

QMatrix dense(std::initializer_list<std::initializer_list<int>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  QMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Subspace span_of(const std::string& text, Index ambient) { return parse_span(text, ambient); }

Poset four_node_poset() { return build_poset(4, {{1, 2}, {3, 2}, {2, 4}}); }

Poset poset_p(int k) {
  switch (k) {
    case 1: return build_poset(3, {{1, 2}, {1, 3}});
    case 2: return build_poset(6, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {2, 6}});
    case 3: return build_poset(3, {{2, 1}, {3, 1}});
    case 4: return build_poset(4, {{1, 2}, {2, 4}, {3, 4}});
    case 5: return build_poset(4, {{1, 3}, {1, 4}, {2, 4}});
    case 6: return build_poset(3, {{1, 2}, {2, 3}});
    default: throw IndexOutOfRange("no example poset P" + std::to_string(k));
  }
}

Poset chain(int p) {
  std::vector<Edge> edges;
  for (int i = 1; i < p; ++i) edges.emplace_back(i, i + 1);
  return build_poset(p, edges);
}

Poset antichain(int p) { return build_poset(p, {}); }

PosetCausalSystem large_example() {
  QMatrix A = sparse(11, 11, {{1, 1, 1}, {3, 1, 1}, {3, 3, 1}, {5, 7, 1}, {9, 1, 1},
                              {9, 3, 1}, {9, 9, 1}, {10, 7, 1}, {11, 6, -1}, {11, 11, 1}});
  QMatrix B = sparse(11, 7, {{1, 1, 1}, {3, 1, 1}, {4, 2, 1}, {4, 3, 1}, {5, 4, 1},
                             {6, 5, 1}, {8, 2, 1}, {9, 3, 1}, {9, 6, 1}, {10, 4, 1},
                             {11, 5, 1}, {11, 7, 1}});
  return assemble(poset_p(4), {2, 2, 3, 4}, {2, 1, 2, 2}, {0, 0, 0, 0}, std::move(A),
                  std::move(B), QMatrix(0, 11));
}

PosetCausalSystem obs_example() {
  const PosetCausalSystem base = large_example();
  QMatrix C = sparse(4, 11, {{1, 1, 1}, {2, 2, 1}, {2, 4, 1}, {3, 6, 1},
                             {4, 1, 1}, {4, 3, 1}, {4, 5, 1}, {4, 10, 1}});
  return assemble(poset_p(4), {2, 2, 3, 4}, {0, 0, 0, 0}, {1, 1, 1, 1}, base.A.entries(),
                  QMatrix(11, 0), std::move(C));
}

PosetCausalSystem large_obs_example() {
  const PosetCausalSystem a = large_example();
  const PosetCausalSystem c = obs_example();
  return assemble(poset_p(4), {2, 2, 3, 4}, {2, 1, 2, 2}, {1, 1, 1, 1}, a.A.entries(),
                  a.B.entries(), c.C.entries());
}

PosetCausalSystem two_node_hat() {
  return assemble(build_poset(2, {{1, 2}}), {1, 1}, {1, 1}, {0, 0}, QMatrix::Zero(2, 2),
                  sparse(2, 2, {{1, 1, 1}, {2, 1, 1}}), QMatrix(0, 2));
}

PosetCausalSystem chain_placement() {
  QMatrix A = sparse(5, 5, {{1, 1, 1}, {3, 1, 1}, {3, 3, 1}, {5, 1, 1}, {5, 3, -1}, {5, 5, 1}});
  QMatrix B = sparse(5, 4, {{1, 1, 1}, {2, 2, 1}, {3, 1, 1}, {3, 3, 1}, {4, 2, 1},
                            {5, 2, 1}, {5, 3, 1}, {5, 4, 1}});
  return assemble(poset_p(6), {2, 2, 1}, {2, 1, 1}, {0, 0, 0}, std::move(A), std::move(B),
                  QMatrix(0, 5));
}

PosetCausalSystem invariance_example() {
  QMatrix A = sparse(4, 4, {{1, 1, 1}, {2, 1, 1}, {3, 1, 1}, {4, 2, 1}, {4, 3, -1}});
  QMatrix B = sparse(4, 3, {{1, 1, 1}});
  return assemble(poset_p(6), {1, 1, 2}, {1, 1, 1}, {0, 0, 0}, std::move(A), std::move(B),
                  QMatrix(0, 4));
}

PosetCausalSystem non_optimal() {
  QMatrix A = sparse(4, 4, {{1, 1, 1}, {4, 3, 1}});
  QMatrix B = sparse(4, 3, {{1, 1, 1}, {2, 2, 1}, {4, 2, 1}});
  QMatrix C = sparse(2, 4, {{1, 1, 1}, {2, 1, 1}, {2, 3, 1}});
  return assemble(build_poset(2, {{1, 2}}), {2, 2}, {2, 1}, {1, 1}, std::move(A),
                  std::move(B), std::move(C));
}

Poset random_poset(int p, double edge_probability, std::mt19937_64& rng) {
  // Edges j -> i only for j < i in a random labelling, so the relation is acyclic.
  std::vector<int> label(p);
  std::iota(label.begin(), label.end(), 1);
  std::shuffle(label.begin(), label.end(), rng);
  std::bernoulli_distribution edge(edge_probability);
  std::vector<Edge> edges;
  for (int a = 0; a < p; ++a) {
    for (int b = a + 1; b < p; ++b) {
      if (edge(rng)) edges.emplace_back(label[a], label[b]);
    }
  }
  return build_poset(p, edges);
}

Partition random_partition(int p, int max_size, bool allow_zero, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(allow_zero ? 0 : 1, max_size);
  std::vector<Index> sizes(p);
  for (Index& s : sizes) s = size(rng);
  return Partition(std::move(sizes));
}

PosetCausalSystem random_system(const Poset& poset, const SystemShape& shape,
                                std::mt19937_64& rng) {
  const int p = poset.size();
  const Partition n = random_partition(p, shape.max_state, shape.allow_zero_blocks, rng);
  const Partition m = random_partition(p, shape.max_input, true, rng);
  const Partition r = random_partition(p, shape.max_output, true, rng);
  PosetCausalSystem sys;
  sys.poset = poset;
  sys.A = random_incidence(poset, n, n, shape.lo, shape.hi, rng, shape.density);
  sys.B = random_incidence(poset, n, m, shape.lo, shape.hi, rng, shape.density);
  sys.C = random_incidence(poset, r, n, shape.lo, shape.hi, rng, shape.density);
  sys.D = random_incidence(poset, r, m, shape.lo, shape.hi, rng, shape.density);
  return sys;
}

PosetCausalSystem random_locally_controllable(const Poset& poset, std::mt19937_64& rng) {
  const int p = poset.size();
  const Partition n = random_partition(p, 3, false, rng);
  const Partition m = random_partition(p, 2, false, rng);
  const Partition r = random_partition(p, 2, true, rng);
  QMatrix A = random_incidence(poset, n, n, -2, 2, rng, 0.5).entries();
  QMatrix B = random_incidence(poset, n, m, -2, 2, rng, 0.5).entries();
  for (int i = 1; i <= p; ++i) {
    QMatrix a, b;
    do {
      a = random_dense(n.size(i), n.size(i), -2, 2, rng);
      b = random_dense(n.size(i), m.size(i), -2, 2, rng);
    } while (oracle_rank(oracle_ctrb(a, b)) != n.size(i));
    set_block(A, n, n, i, i, a);
    set_block(B, n, m, i, i, b);
  }
  QMatrix C = random_incidence(poset, r, n, -2, 2, rng, 0.5).entries();
  return make_system(poset, n, m, r, std::move(A), std::move(B), std::move(C),
                     QMatrix::Zero(r.total(), m.total()), std::nullopt);
}

PosetCausalSystem random_locally_observable(const Poset& poset, std::mt19937_64& rng) {
  const int p = poset.size();
  const Partition n = random_partition(p, 3, false, rng);
  const Partition m = random_partition(p, 2, true, rng);
  const Partition r = random_partition(p, 2, false, rng);
  QMatrix A = random_incidence(poset, n, n, -2, 2, rng, 0.5).entries();
  QMatrix C = random_incidence(poset, r, n, -2, 2, rng, 0.5).entries();
  for (int i = 1; i <= p; ++i) {
    QMatrix a, c;
    do {
      a = random_dense(n.size(i), n.size(i), -2, 2, rng);
      c = random_dense(r.size(i), n.size(i), -2, 2, rng);
    } while (oracle_rank(oracle_ctrb(QMatrix(a.transpose()), QMatrix(c.transpose()))) !=
             n.size(i));
    set_block(A, n, n, i, i, a);
    set_block(C, r, n, i, i, c);
  }
  QMatrix B = random_incidence(poset, n, m, -2, 2, rng, 0.5).entries();
  return make_system(poset, n, m, r, std::move(A), std::move(B), std::move(C),
                     QMatrix::Zero(r.total(), m.total()), std::nullopt);
}

Subspace random_subspace(Index ambient, Index max_dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<Index> count(0, max_dim);
  return Subspace::span(random_dense(ambient, count(rng), -2, 2, rng));
}

Subspace random_structured_subspace(const Partition& n, const Subspace& inside,
                                    std::mt19937_64& rng) {
  std::vector<Subspace> parts;
  for (int j = 1; j <= n.parts(); ++j) {
    const Subspace host = intersect(inside, coordinate_subspace(n, {j}));
    if (host.dim() == 0) continue;
    std::uniform_int_distribution<Index> count(0, host.dim());
    parts.push_back(
        Subspace::span(host.basis() * random_dense(host.dim(), count(rng), -2, 2, rng)));
  }
  return sum(parts, n.total());
}

InputSignal random_input(Index inputs, double h, Index steps, std::mt19937_64& rng) {
  InputSignal u;
  u.h = h;
  for (Index k = 0; k < steps; ++k) u.values.push_back(random_vector(inputs, rng));
  return u;
}

Eigen::VectorXd random_vector(Index size, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  Eigen::VectorXd v(size);
  for (Index i = 0; i < size; ++i) v(i) = value(rng);
  return v;
}

double distance_to(const Subspace& u, const Eigen::VectorXd& x) {
  if (u.dim() == 0) return x.norm();
  const Eigen::MatrixXd basis = to_double(u.basis());
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(x.size(), u.dim());
  return (x - q * (q.transpose() * x)).norm();
}

Index oracle_rank(QMatrix m) {
  Index rank = 0;
  for (Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Index pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(rank).swap(m.row(pivot));
    for (Index i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      const Rational f = m(i, col) / m(rank, col);
      for (Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

bool oracle_span_contains(const QMatrix& big, const QMatrix& small) {
  QMatrix both(big.rows(), big.cols() + small.cols());
  both << big, small;
  return oracle_rank(both) == oracle_rank(big);
}

bool oracle_same_span(const QMatrix& u, const QMatrix& v) {
  return oracle_span_contains(u, v) && oracle_span_contains(v, u);
}

Rational oracle_det(const QMatrix& m) {
  const Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (Index j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    QMatrix minor(n - 1, n - 1);
    for (Index r = 1; r < n; ++r) {
      for (Index c = 0, cc = 0; c < n; ++c) {
        if (c != j) minor(r - 1, cc++) = m(r, c);
      }
    }
    const Rational term = m(0, j) * oracle_det(minor);
    total += (j % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

QMatrix oracle_ctrb(const QMatrix& A, const QMatrix& B) {
  const Index n = A.rows();
  QMatrix out(n, n * B.cols());
  QMatrix power = B;
  for (Index k = 0; k < n; ++k) {
    out.middleCols(k * B.cols(), B.cols()) = power;
    power = A * power;
  }
  return out;
}

std::vector<std::vector<bool>> oracle_closure(int p, const std::vector<Edge>& edges) {
  std::vector<std::vector<bool>> geq(p + 1, std::vector<bool>(p + 1, false));
  for (int i = 1; i <= p; ++i) geq[i][i] = true;
  for (const auto& [j, i] : edges) geq[j][i] = true;
  for (int k = 1; k <= p; ++k) {
    for (int a = 1; a <= p; ++a) {
      for (int b = 1; b <= p; ++b) {
        if (geq[a][k] && geq[k][b]) geq[a][b] = true;
      }
    }
  }
  return geq;
}

}  // namespace posetsys::testing
