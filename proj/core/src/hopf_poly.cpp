#include "phi4/hopf_poly.hpp"

#include <algorithm>
#include <sstream>

#include "phi4/error.hpp"

namespace phi4 {

ScalarPoly ScalarPoly::monomial(int alpha_pow, int beta_pow, const Rational& c) {
  ScalarPoly p;
  p.add({alpha_pow, beta_pow}, c);
  return p;
}

void ScalarPoly::add(ScalarSignature sig, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(sig, 0);
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational ScalarPoly::coefficient(ScalarSignature sig) const {
  auto it = terms_.find(sig);
  return it == terms_.end() ? Rational(0) : it->second;
}

int ScalarPoly::min_alpha_pow() const {
  int m = 0;
  bool first = true;
  for (const auto& [sig, c] : terms_) {
    if (first || sig.alpha_pow < m) m = sig.alpha_pow;
    first = false;
  }
  return m;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
  for (const auto& [sig, c] : o.terms_) add(sig, c);
  return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o) {
  for (const auto& [sig, c] : o.terms_) add(sig, -c);
  return *this;
}

std::string ScalarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [sig, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << phi4::to_string(c);
    if (sig.alpha_pow != 0) os << "*alpha^" << sig.alpha_pow;
    if (sig.beta_pow != 0) os << "*beta^" << sig.beta_pow;
  }
  return os.str();
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
  ScalarPoly out;
  for (const auto& [sa, ca] : a) {
    for (const auto& [sb, cb] : b) out.add({sa.alpha_pow + sb.alpha_pow, sa.beta_pow + sb.beta_pow}, ca * cb);
  }
  return out;
}

ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }

std::string HMonomial::to_string() const {
  if (x_pow == 0 && y_pow == 0) return "1";
  std::string s;
  if (x_pow > 0) s += x_pow == 1 ? "X" : "X^" + std::to_string(x_pow);
  if (y_pow > 0) s += y_pow == 1 ? "Y" : "Y^" + std::to_string(y_pow);
  return s;
}

HPolynomial HPolynomial::monomial(HMonomial m, const ScalarPoly& c) {
  HPolynomial p;
  p.add(m, c);
  return p;
}

void HPolynomial::add(HMonomial m, const ScalarPoly& c) {
  if (c.is_zero()) return;
  auto& slot = terms_[m];
  slot += c;
  if (slot.is_zero()) terms_.erase(m);
}

const ScalarPoly& HPolynomial::coefficient(HMonomial m) const {
  static const ScalarPoly zero;
  auto it = terms_.find(m);
  return it == terms_.end() ? zero : it->second;
}

HPolynomial& HPolynomial::operator+=(const HPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

HPolynomial operator*(const HPolynomial& a, const HPolynomial& b) {
  HPolynomial out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) out.add({ma.x_pow + mb.x_pow, ma.y_pow + mb.y_pow}, ca * cb);
  }
  return out;
}

HPolynomial operator-(const HPolynomial& a, const HPolynomial& b) {
  HPolynomial out = a;
  for (const auto& [m, c] : b) out.add(m, ScalarPoly(Rational(-1)) * c);
  return out;
}

void HTensor::add(HMonomial left, HMonomial right, const ScalarPoly& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(left, right);
  auto& slot = terms_[key];
  slot += c;
  if (slot.is_zero()) terms_.erase(key);
}

const ScalarPoly& HTensor::coefficient(HMonomial left, HMonomial right) const {
  static const ScalarPoly zero;
  auto it = terms_.find({left, right});
  return it == terms_.end() ? zero : it->second;
}

HTensor coproduct_hat(HMonomial m) {
  if (m.x_pow < 0 || m.y_pow < 0) throw InvalidArgument("negative exponent");
  HTensor out;
  for (int kx = 0; kx <= m.x_pow; ++kx) {
    for (int ky = 0; ky <= m.y_pow; ++ky) {
      const Rational c(binomial(static_cast<unsigned>(m.x_pow), static_cast<unsigned>(kx)) *
                       binomial(static_cast<unsigned>(m.y_pow), static_cast<unsigned>(ky)));
      out.add({kx, ky}, {m.x_pow - kx, m.y_pow - ky}, c);
    }
  }
  return out;
}

HPolynomial antipode_hat(HMonomial m) {
  if (m.y_pow != 0 || m.x_pow % 2 != 0) return {};
  const int l = m.x_pow / 2;
  Rational c(double_factorial_odd(static_cast<unsigned>(l)));
  c *= Rational(Integer(1) << static_cast<unsigned>(l));
  if (l % 2 == 1) c = -c;
  return HPolynomial::monomial({0, l}, ScalarPoly::eta_power(l, c));
}

HTensor chi_eta(const HPolynomial& p) {
  HTensor out;
  for (const auto& [m, c] : p) {
    for (const auto& [pair, cd] : coproduct_hat(m)) {
      for (const auto& [am, ac] : antipode_hat(pair.first)) out.add(am, pair.second, c * cd * ac);
    }
  }
  return out;
}

HPolynomial m_mult(const HTensor& t) {
  HPolynomial out;
  for (const auto& [pair, c] : t) out.add({pair.first.x_pow + pair.second.x_pow, pair.first.y_pow + pair.second.y_pow}, c);
  return out;
}

HPolynomial deform(const HPolynomial& p) { return m_mult(chi_eta(p)); }

HPolynomial exp_deform(int order) {
  if (order < 0 || order > 12) throw CapExceeded("exp_deform order must lie in [0, 12]");
  HPolynomial series;
  for (int n = 0; n <= order; ++n) {
    Rational c = Rational(1) / Rational(factorial(static_cast<unsigned>(n)));
    if (n % 2 == 1) c = -c;
    series.add({n, 0}, ScalarPoly::monomial(n, 0, c));
  }
  return deform(series);
}

HPolynomial exp_target(int order) {
  HPolynomial out;
  for (int q = 0; 2 * q <= order; ++q) {
    for (int p = 0; p + 2 * q <= order; ++p) {
      Rational c = Rational(1) / Rational(factorial(static_cast<unsigned>(p)) * factorial(static_cast<unsigned>(q)));
      if ((p + q) % 2 == 1) c = -c;
      out.add({p, q}, ScalarPoly::monomial(p, q, c));
    }
  }
  return out;
}

}  // namespace phi4
