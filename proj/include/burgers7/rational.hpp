#pragma once

/// Exact arithmetic foundation: arbitrary-precision rationals for the
/// coefficient derivation, and a 50-digit float for convergence studies whose
/// errors fall below double precision.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace burgers7 {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

/// Dense univariate polynomial over the rationals, coeffs[j] multiplying s^j.
using RationalPoly = std::vector<Rational>;

inline Rational poly_eval(const RationalPoly& p, const Rational& s) {
    Rational acc = 0;
    for (std::size_t j = p.size(); j-- > 0;) acc = acc * s + p[j];
    return acc;
}

/// Horner evaluation after lossless conversion of integer-valued rational
/// coefficients; Scalar is double, complex<double>, or BigFloat.
template <typename Scalar>
Scalar poly_eval_as(const RationalPoly& p, const Scalar& s) {
    Scalar acc{0};
    for (std::size_t j = p.size(); j-- > 0;)
        acc = acc * s + Scalar(static_cast<double>(p[j]));
    return acc;
}

inline RationalPoly poly_derivative(const RationalPoly& p) {
    RationalPoly d;
    for (std::size_t j = 1; j < p.size(); ++j) d.push_back(Rational(j) * p[j]);
    return d;
}

}  // namespace burgers7
