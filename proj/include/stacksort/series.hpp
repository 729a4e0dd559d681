#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stacksort {

using BigRational = boost::multiprecision::cpp_rational;

/// Coefficient vector [x^0, x^1, ...] of a formal power series; all
/// operations are exact.
using RationalSeries = std::vector<BigRational>;

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b, std::size_t terms);

/// Square root of a series with constant term 1, via the coefficient
/// recurrence s_n = (u_n - sum_{0<i<n} s_i s_{n-i}) / 2.
RationalSeries series_sqrt(const RationalSeries& u, std::size_t terms);

}  // namespace stacksort
