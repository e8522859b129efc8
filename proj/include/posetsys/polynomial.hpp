#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "posetsys/rational.hpp"

namespace posetsys {

// Polynomial over the rationals, coefficients in ascending degree. The zero
// polynomial has no coefficients; trailing zeros are always trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(std::initializer_list<Rational> ascending);

  static Polynomial monomial(int degree, const Rational& c = 1);
  // Π (s - r) over the given roots.
  static Polynomial from_roots(const std::vector<Rational>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(int k) const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Rational operator()(const Rational& s) const;
  QMatrix operator()(const QMatrix& m) const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

  std::string to_string(const std::string& var = "s") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// det(sI - m), by the Faddeev-LeVerrier recursion.
Polynomial char_poly(const QMatrix& m);

}  // namespace posetsys
