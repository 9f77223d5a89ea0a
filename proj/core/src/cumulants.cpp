#include "phi4/cumulants.hpp"

#include "phi4/error.hpp"

namespace phi4 {

void GradedSum::add(ScalarSignature sig, const DiagramSum& s, const Rational& scale) {
  if (s.empty() || scale == 0) return;
  auto& slot = parts_[sig];
  slot.add(s, scale);
  if (slot.empty()) parts_.erase(sig);
}

void GradedSum::add(const GradedSum& o, const Rational& scale) {
  for (const auto& [sig, s] : o.parts_) add(sig, s, scale);
}

const DiagramSum& GradedSum::part(ScalarSignature sig) const {
  static const DiagramSum empty;
  auto it = parts_.find(sig);
  return it == parts_.end() ? empty : it->second;
}

bool GradedSum::all_connected() const {
  for (const auto& [sig, s] : parts_) {
    for (const auto& [key, term] : s) {
      if (!is_connected(term.graph)) return false;
    }
  }
  return true;
}

GradedSum GradedSum::one() {
  GradedSum g;
  g.add({0, 0}, DiagramSum::single(Multigraph()));
  return g;
}

GradedSum product(const GradedSum& a, const GradedSum& b) {
  GradedSum out;
  for (const auto& [sa, da] : a) {
    for (const auto& [sb, db] : b) {
      out.add({sa.alpha_pow + sb.alpha_pow, sa.beta_pow + sb.beta_pow}, product(da, db));
    }
  }
  return out;
}

GradedSum scaled(const GradedSum& a, const Rational& s) {
  GradedSum out;
  out.add(a, s);
  return out;
}

namespace {

void check_order(int n, const CumulantConfig& cfg) {
  if (n < 0) throw InvalidArgument("negative order");
  if (n > cfg.max_order) {
    throw CapExceeded("order " + std::to_string(n) + " exceeds the cap of " + std::to_string(cfg.max_order));
  }
}

template <typename Source>
GradedSum dressed(int n, Source&& source) {
  GradedSum out;
  const Rational sign = n % 2 == 0 ? 1 : -1;
  for (int m = 0; m <= n; ++m) {
    const Rational c = sign * Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(m)));
    out.add({m, n - m}, source(m, n - m), c);
  }
  return out;
}

}  // namespace

GradedSum moment(int n, const CumulantConfig& cfg) {
  check_order(n, cfg);
  if (n == 0) return GradedSum::one();
  if (n == 1) return {};
  return dressed(n, [&](int a, int b) { return p0(a, b, cfg.wick); });
}

GradedSum cumulant(int n, const CumulantConfig& cfg) {
  check_order(n, cfg);
  if (n < 2) throw InvalidArgument("cumulant order must be at least 2");
  std::vector<GradedSum> mu;
  std::vector<GradedSum> kappa(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) mu.push_back(moment(k, cfg));
  for (int k = 2; k <= n; ++k) {
    GradedSum kk = mu[static_cast<std::size_t>(k)];
    for (int m = 2; m <= k - 2; ++m) {
      const Rational c(binomial(static_cast<unsigned>(k - 1), static_cast<unsigned>(m - 1)));
      kk.add(product(kappa[static_cast<std::size_t>(m)], mu[static_cast<std::size_t>(k - m)]), -c);
    }
    kappa[static_cast<std::size_t>(k)] = std::move(kk);
  }
  if (!kappa[static_cast<std::size_t>(n)].all_connected()) {
    throw InternalError("cumulant " + std::to_string(n) + " contains a disconnected diagram");
  }
  return kappa[static_cast<std::size_t>(n)];
}

GradedSum cumulant_direct(int n, const CumulantConfig& cfg) {
  check_order(n, cfg);
  if (n < 2) throw InvalidArgument("cumulant order must be at least 2");
  return dressed(n, [&](int a, int b) { return p(a, b, cfg.wick); });
}

void SymbolicCoefficient::add(CountertermSymbols sym, const DiagramSum& s, const Rational& scale) {
  if (s.empty() || scale == 0) return;
  auto& slot = terms[sym];
  slot.add(s, scale);
  if (slot.empty()) terms.erase(sym);
}

SymbolicCoefficient& SymbolicCoefficient::operator+=(const SymbolicCoefficient& o) {
  for (const auto& [sym, s] : o.terms) add(sym, s);
  return *this;
}

PowerSeries<SymbolicCoefficient> log_partition_series(int order, bool include_gamma, const CumulantConfig& cfg) {
  check_order(order, cfg);
  PowerSeries<SymbolicCoefficient> out(order);
  const DiagramSum unit = DiagramSum::single(Multigraph());
  if (include_gamma) {
    if (order >= 2) out[2].add({0, 1, 0}, unit, 1);
    if (order >= 3) out[3].add({0, 0, 1}, unit, -1);
  }
  for (int n = 2; n <= order; ++n) {
    const GradedSum kappa = cumulant(n, cfg);
    const Rational inv_fact = Rational(1) / Rational(factorial(static_cast<unsigned>(n)));
    for (const auto& [sig, s] : kappa) {
      const int power = sig.alpha_pow + 2 * sig.beta_pow;
      if (power > order) continue;
      // alpha^m beta^j = eps^(m + 2j) 4^-m 2^-j C2^j
      Rational w = -inv_fact;
      w /= Rational(Integer(1) << static_cast<unsigned>(2 * sig.alpha_pow + sig.beta_pow));
      out[power].add({sig.beta_pow, 0, 0}, s, w);
    }
  }
  return out;
}

}  // namespace phi4
