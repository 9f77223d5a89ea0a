#pragma once

#include <cstddef>
#include <vector>

#include "phi4/rational.hpp"

namespace phi4 {

// Truncated formal power series sum_{k<=order} c_k t^k. T needs +=, a product
// `T * T` (via the Mul functor) and scaling by Rational.
template <typename T>
struct PowerSeries {
  int order = 0;
  std::vector<T> coeffs;  // size order + 1

  PowerSeries() : coeffs(1) {}
  explicit PowerSeries(int order_) : order(order_), coeffs(static_cast<std::size_t>(order_) + 1) {}

  T& operator[](int k) { return coeffs[static_cast<std::size_t>(k)]; }
  const T& operator[](int k) const { return coeffs[static_cast<std::size_t>(k)]; }
};

template <typename T, typename Mul>
PowerSeries<T> multiply(const PowerSeries<T>& a, const PowerSeries<T>& b, Mul mul) {
  const int order = a.order < b.order ? a.order : b.order;
  PowerSeries<T> out(order);
  for (int i = 0; i <= order; ++i) {
    for (int j = 0; i + j <= order; ++j) out[i + j] += mul(a[i], b[j]);
  }
  return out;
}

// exp(s) for a series without constant term; `one` is the multiplicative unit.
template <typename T, typename Mul, typename Scale>
PowerSeries<T> exp_series(const PowerSeries<T>& s, const T& one, Mul mul, Scale scale) {
  PowerSeries<T> out(s.order);
  PowerSeries<T> power(s.order);
  power[0] = one;
  out[0] = one;
  for (int k = 1; k <= s.order; ++k) {
    power = multiply(power, s, mul);
    const Rational inv_fact = Rational(1, 1) / Rational(factorial(static_cast<unsigned>(k)));
    for (int i = 0; i <= s.order; ++i) out[i] += scale(power[i], inv_fact);
  }
  return out;
}

}  // namespace phi4
