#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Dense>

namespace posetsys {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using QMatrix = Mat<Rational>;
using QVector = Vec<Rational>;
using Index = Eigen::Index;

// Accepts "7", "-3/4", "0.125", "2.5e-3". Throws ParseError otherwise,
// including for a zero denominator.
Rational parse_rational(std::string_view text);

// "7", "-3/4".
std::string to_string(const Rational& q);

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (m(i, j) != 0) return false;
    }
  }
  return true;
}

Eigen::MatrixXd to_double(const QMatrix& m);
Eigen::VectorXd to_double(const QVector& v);

}  // namespace posetsys
