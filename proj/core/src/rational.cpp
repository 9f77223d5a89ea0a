#include "phi4/rational.hpp"

#include "phi4/error.hpp"

namespace phi4 {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw InvalidArgument("not a rational number: '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer double_factorial_odd(unsigned l) {
  Integer r = 1;
  for (unsigned i = 1; i <= l; ++i) r *= 2 * i - 1;
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace phi4
