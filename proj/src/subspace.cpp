#include "posetsys/subspace.hpp"

#include <algorithm>
#include <cctype>

#include "posetsys/errors.hpp"
#include "posetsys/linalg.hpp"

namespace posetsys {
namespace {

void check_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw AmbientMismatch("subspaces live in Q^" + std::to_string(u.ambient_dim()) +
                          " and Q^" + std::to_string(v.ambient_dim()));
  }
}

}  // namespace

Subspace Subspace::span(const QMatrix& columns) {
  const Echelon<Rational> e = rref(columns.transpose());
  Subspace s(columns.rows());
  const Index k = static_cast<Index>(e.pivots.size());
  s.basis_ = e.reduced.topRows(k).transpose();
  return s;
}

Subspace Subspace::whole(Index ambient) {
  return span(QMatrix::Identity(ambient, ambient));
}

Subspace image(const QMatrix& m) { return Subspace::span(m); }

Subspace kernel(const QMatrix& m) { return Subspace::span(nullspace(m)); }

Subspace sum(const Subspace& u, const Subspace& v) {
  check_ambient(u, v);
  QMatrix both(u.ambient_dim(), u.dim() + v.dim());
  both << u.basis(), v.basis();
  return Subspace::span(both);
}

Subspace sum(const std::vector<Subspace>& terms, Index ambient) {
  Subspace acc(ambient);
  for (const Subspace& t : terms) acc = sum(acc, t);
  return acc;
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  check_ambient(u, v);
  // U a = V b  <=>  [U, -V] (a; b) = 0.
  QMatrix stacked(u.ambient_dim(), u.dim() + v.dim());
  stacked << u.basis(), -v.basis();
  const QMatrix coeffs = nullspace(stacked);
  return Subspace::span(u.basis() * coeffs.topRows(u.dim()));
}

Subspace intersect(const std::vector<Subspace>& terms, Index ambient) {
  Subspace acc = Subspace::whole(ambient);
  for (const Subspace& t : terms) acc = intersect(acc, t);
  return acc;
}

Subspace complement(const Subspace& u) {
  if (u.dim() == 0) return Subspace::whole(u.ambient_dim());
  return kernel(u.basis().transpose());
}

Subspace ominus(const Subspace& u, const Subspace& v) {
  check_ambient(u, v);
  return intersect(u, complement(v));
}

bool contains(const Subspace& u, const Subspace& v) {
  check_ambient(u, v);
  return sum(u, v).dim() == u.dim();
}

bool contains(const Subspace& u, const QVector& x) {
  if (x.size() != u.ambient_dim()) throw AmbientMismatch("vector length differs");
  return contains(u, Subspace::span(x));
}

Subspace apply(const QMatrix& m, const Subspace& u) {
  if (m.cols() != u.ambient_dim()) throw AmbientMismatch("matrix does not act on U");
  return Subspace::span(m * u.basis());
}

Subspace project_onto(const Subspace& u, const Subspace& w) {
  check_ambient(u, w);
  if (u.dim() == 0) return Subspace(u.ambient_dim());
  // P_U = Q (Q^T Q)^{-1} Q^T.
  const QMatrix& q = u.basis();
  const QMatrix gram = q.transpose() * q;
  return Subspace::span(q * solve(gram, q.transpose() * w.basis()));
}

Subspace coordinate_subspace(const Partition& n, const NodeSet& s) {
  const std::vector<Index> idx = n.coordinates(s);
  QMatrix cols = QMatrix::Zero(n.total(), static_cast<Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) cols(idx[k], static_cast<Index>(k)) = 1;
  return Subspace::span(cols);
}

Subspace coordinate_project(const Subspace& u, const Partition& n, const NodeSet& s) {
  if (u.ambient_dim() != n.total()) {
    throw AmbientMismatch("subspace ambient dimension differs from the partition total");
  }
  QMatrix b = QMatrix::Zero(u.ambient_dim(), u.dim());
  for (Index k : n.coordinates(s)) b.row(k) = u.basis().row(k);
  return Subspace::span(b);
}

Subspace embed(const Subspace& u, const Partition& n, const NodeSet& s) {
  const std::vector<Index> idx = n.coordinates(s);
  if (u.ambient_dim() != static_cast<Index>(idx.size())) {
    throw AmbientMismatch("subspace does not live in the compressed coordinates");
  }
  QMatrix b = QMatrix::Zero(n.total(), u.dim());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    b.row(idx[k]) = u.basis().row(static_cast<Index>(k));
  }
  return Subspace::span(b);
}

std::string to_span_string(const QVector& v) {
  std::string out;
  for (Index k = 0; k < v.size(); ++k) {
    const Rational& c = v(k);
    if (c == 0) continue;
    std::string coef;
    if (c == -1) {
      coef = "-";
    } else if (c != 1) {
      coef = to_string(c);
    }
    if (!out.empty() && c > 0) out += "+";
    out += coef + "e" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

std::string to_span_string(const Subspace& u) {
  if (u.dim() == 0) return "{0}";
  std::string out = "span{";
  for (Index k = 0; k < u.dim(); ++k) {
    if (k > 0) out += ", ";
    out += to_span_string(QVector(u.basis().col(k)));
  }
  return out + "}";
}

Subspace parse_span(std::string_view text, Index ambient) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s == "{0}") return Subspace(ambient);
  if (!s.starts_with("span{") || !s.ends_with("}")) {
    throw ParseError("expected span{...} or {0}: " + std::string(text));
  }
  s = s.substr(5, s.size() - 6);
  std::vector<QVector> cols;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t end = std::min(s.find(',', pos), s.size());
    const std::string vec = s.substr(pos, end - pos);
    QVector v = QVector::Zero(ambient);
    std::size_t k = 0;
    while (k < vec.size()) {
      const std::size_t term_end = vec.find_first_of("+-", k + 1);
      const std::string term = vec.substr(k, term_end == std::string::npos ? std::string::npos
                                                                          : term_end - k);
      const std::size_t e = term.find('e');
      if (e == std::string::npos || e + 1 == term.size()) {
        throw ParseError("bad term \"" + term + "\" in " + std::string(text));
      }
      std::string coef = term.substr(0, e);
      if (coef.empty() || coef == "+") coef = "1";
      if (coef == "-") coef = "-1";
      if (coef.front() == '+') coef.erase(0, 1);
      const std::string idx = term.substr(e + 1);
      if (idx.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("bad coordinate in \"" + term + "\"");
      }
      const Index i = std::stol(idx);
      if (i < 1 || i > ambient) throw ParseError("coordinate e" + idx + " out of range");
      v(i - 1) += parse_rational(coef);
      if (term_end == std::string::npos) break;
      k = term_end;
    }
    cols.push_back(std::move(v));
    pos = end + 1;
  }
  QMatrix m(ambient, static_cast<Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) m.col(static_cast<Index>(c)) = cols[c];
  return Subspace::span(m);
}

}  // namespace posetsys
