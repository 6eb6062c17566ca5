#pragma once

#include <complex>
#include <type_traits>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace qcstar {

using Complex = std::complex<double>;

/// Real type with 100 significant decimal digits. Used where double loses the
/// information being checked, e.g. sums whose terms span 2^-84 in magnitude.
/// The limbs live inline, so Eigen's sparse storage may relocate values freely.
using HighPrecision = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>,
                                                    boost::multiprecision::et_off>;

template <typename Scalar>
struct ScalarTraits {
    using Real = Scalar;
    static constexpr bool is_complex = false;
};

template <typename T>
struct ScalarTraits<std::complex<T>> {
    using Real = T;
    static constexpr bool is_complex = true;
};

template <typename Scalar>
double magnitude(const Scalar& x) {
    using std::abs;
    return static_cast<double>(abs(x));
}

template <typename Scalar>
typename ScalarTraits<Scalar>::Real real_part(const Scalar& x) {
    if constexpr (ScalarTraits<Scalar>::is_complex)
        return x.real();
    else
        return x;
}

}  // namespace qcstar
