#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>

namespace qcstar {

/// Arbitrary-precision integer. Expression templates are off so the type
/// behaves as a plain value inside Eigen kernels.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Arbitrary-precision rational.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntegerMatrix = DenseMatrix<Integer>;

inline IntegerMatrix integer_matrix(Eigen::Index rows, Eigen::Index cols) {
    return IntegerMatrix::Constant(rows, cols, Integer(0));
}

inline IntegerMatrix integer_identity(Eigen::Index n) {
    IntegerMatrix m = integer_matrix(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

}  // namespace qcstar
