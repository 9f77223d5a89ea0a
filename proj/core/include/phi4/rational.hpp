#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace phi4 {

using Rational = mpq_class;
using Integer = mpz_class;

// Serializes as "p/q" (always with an explicit denominator).
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
// (2l-1)!! for l >= 0, i.e. the number of perfect pairings of 2l objects.
Integer double_factorial_odd(unsigned l);
Integer binomial(unsigned n, unsigned k);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace phi4
