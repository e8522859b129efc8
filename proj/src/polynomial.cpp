#include "posetsys/polynomial.hpp"

#include <algorithm>

#include "posetsys/errors.hpp"

namespace posetsys {

Polynomial::Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> ascending) : c_(ascending) {
  trim();
}

Polynomial Polynomial::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
  Polynomial p{Rational(1)};
  for (const Rational& r : roots) p = p * Polynomial{Rational(-r), Rational(1)};
  return p;
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

Rational Polynomial::operator()(const Rational& s) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

QMatrix Polynomial::operator()(const QMatrix& m) const {
  if (m.rows() != m.cols()) throw ShapeMismatch("polynomial of a non-square matrix");
  QMatrix acc = QMatrix::Zero(m.rows(), m.cols());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = (acc * m).eval();
    acc.diagonal().array() += *it;
  }
  return acc;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return Polynomial();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0 || mag != 1) {
      out += posetsys::to_string(mag);
      if (k > 0) out += " ";
    }
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

Polynomial char_poly(const QMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("char_poly of a non-square matrix");
  const Index n = m.rows();
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  QMatrix mk = QMatrix::Zero(n, n);
  for (Index k = 1; k <= n; ++k) {
    mk = (m * mk).eval();
    mk.diagonal().array() += c[n - k + 1];
    const QMatrix am = m * mk;
    c[n - k] = -am.trace() / Rational(k);
  }
  return Polynomial(std::move(c));
}

}  // namespace posetsys
