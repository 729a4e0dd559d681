#include "stacksort/series.hpp"

#include <stdexcept>

namespace stacksort {

namespace {

BigRational coeff(const RationalSeries& s, std::size_t i) {
  return i < s.size() ? s[i] : BigRational(0);
}

}  // namespace

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b, std::size_t terms) {
  RationalSeries out(terms, BigRational(0));
  for (std::size_t i = 0; i < terms && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < terms && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RationalSeries series_sqrt(const RationalSeries& u, std::size_t terms) {
  if (u.empty() || u[0] != 1)
    throw std::invalid_argument("series_sqrt expects constant term 1");
  RationalSeries s(terms, BigRational(0));
  if (terms == 0) return s;
  s[0] = 1;
  for (std::size_t n = 1; n < terms; ++n) {
    BigRational acc = coeff(u, n);
    for (std::size_t i = 1; i < n; ++i) acc -= s[i] * s[n - i];
    s[n] = acc / 2;
  }
  return s;
}

}  // namespace stacksort
