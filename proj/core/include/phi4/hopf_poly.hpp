#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>

#include "phi4/cumulants.hpp"
#include "phi4/rational.hpp"

namespace phi4 {

// Laurent polynomial in alpha, beta with rational coefficients. eta stands for
// beta * alpha^-2 and is always expanded.
class ScalarPoly {
 public:
  using Map = std::map<ScalarSignature, Rational>;

  ScalarPoly() = default;
  ScalarPoly(const Rational& c) { add({0, 0}, c); }  // NOLINT: constants convert implicitly
  static ScalarPoly monomial(int alpha_pow, int beta_pow, const Rational& c = 1);
  static ScalarPoly eta_power(int l, const Rational& c = 1) { return monomial(-2 * l, l, c); }

  void add(ScalarSignature sig, const Rational& c);
  bool is_zero() const { return terms_.empty(); }
  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }
  Rational coefficient(ScalarSignature sig) const;
  int min_alpha_pow() const;

  ScalarPoly& operator+=(const ScalarPoly& o);
  ScalarPoly& operator-=(const ScalarPoly& o);
  bool operator==(const ScalarPoly&) const = default;

  std::string to_string() const;

 private:
  Map terms_;
};

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b);
ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b);

// X^x_pow Y^y_pow; (0, 0) is the unit.
struct HMonomial {
  int x_pow = 0;
  int y_pow = 0;

  auto operator<=>(const HMonomial&) const = default;
  std::string to_string() const;
};

class HPolynomial {
 public:
  using Map = std::map<HMonomial, ScalarPoly>;

  HPolynomial() = default;
  static HPolynomial monomial(HMonomial m, const ScalarPoly& c = Rational(1));

  void add(HMonomial m, const ScalarPoly& c);
  const ScalarPoly& coefficient(HMonomial m) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }

  HPolynomial& operator+=(const HPolynomial& o);
  bool operator==(const HPolynomial&) const = default;

 private:
  Map terms_;
};

HPolynomial operator*(const HPolynomial& a, const HPolynomial& b);
HPolynomial operator-(const HPolynomial& a, const HPolynomial& b);

class HTensor {
 public:
  using Map = std::map<std::pair<HMonomial, HMonomial>, ScalarPoly>;

  void add(HMonomial left, HMonomial right, const ScalarPoly& c);
  const ScalarPoly& coefficient(HMonomial left, HMonomial right) const;
  std::size_t size() const { return terms_.size(); }
  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }
  bool operator==(const HTensor&) const = default;

 private:
  Map terms_;
};

// Binomial coproduct X^n -> sum_k C(n1,k1) C(n2,k2) X^k (x) X^(n-k).
HTensor coproduct_hat(HMonomial m);

// X^(2l) -> (2l-1)!! (-2 eta Y)^l; every other monomial except 1 -> 0.
HPolynomial antipode_hat(HMonomial m);

// (antipode_hat (x) id) coproduct_hat, extended linearly.
HTensor chi_eta(const HPolynomial& p);

// Multiplies the two slots.
HPolynomial m_mult(const HTensor& t);

// m_mult(chi_eta(p)).
HPolynomial deform(const HPolynomial& p);

// deform applied to sum_{n<=order} (-alpha X)^n / n!.
HPolynomial exp_deform(int order);
// sum_{p+2q<=order} (-alpha)^p (-beta)^q X^p Y^q / (p! q!).
HPolynomial exp_target(int order);

}  // namespace phi4
