#include "phi4/valuator.hpp"

#include <cmath>

#include "kernel.hpp"
#include "phi4/error.hpp"

namespace phi4 {

Bindings Bindings::from_eps(double eps, const Counterterms& ct) {
  return {eps / 4.0, 0.5 * eps * eps * ct.c2, eps * eps * ct.c3 - eps * eps * eps * ct.c4};
}

Valuator::Valuator(int N, ValuationMethod method, ValuationOptions opts) : N_(N), method_(method), opts_(opts) {
  if (N < 0) throw InvalidArgument("negative cutoff");
}

double Valuator::connected(const Multigraph& g) {
  const auto key = canonicalize(g);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const auto r = pi(g, N_, method_, opts_);
  work_ += r.work;
  cache_.emplace(key, r.value);
  return r.value;
}

double Valuator::graph(const Multigraph& g) {
  double v = 1.0;
  for (const auto& comp : connected_components(g)) v *= connected(induced_subgraph(g, comp));
  return v;
}

const Counterterms& Valuator::counterterms() {
  if (!ct_) {
    Counterterms c;
    c.N = N_;
    detail::KahanSum s;
    for (const Cutoff ball(N_); const auto& k : ball.modes()) s.add(propagator(k));
    c.c1 = s.value();
    c.c2 = 6.0 * graph(diagrams::bubble());
    c.c3 = 0.75 * graph(diagrams::banana(4));
    c.c4 = 4.5 * graph(diagrams::double_triangle());
    ct_ = c;
  }
  return *ct_;
}

double Valuator::valuate(const DiagramSum& s) {
  detail::KahanSum acc;
  for (const auto& [key, term] : s) acc.add(to_double(term.coeff) * graph(term.graph));
  return acc.value();
}

double Valuator::valuate(const BphzReduction& r) {
  const double b = bubble();
  detail::KahanSum acc;
  for (const auto& t : r.terms) acc.add(to_double(t.coeff) * std::pow(b, t.bubble_power) * graph(t.contracted));
  return acc.value();
}

double Valuator::valuate(const GradedSum& s, const std::optional<Bindings>& b) {
  detail::KahanSum acc;
  for (const auto& [sig, part] : s) {
    if (part.empty()) continue;
    double scalar = 1.0;
    if (sig.alpha_pow != 0 || sig.beta_pow != 0) {
      if (!b) throw UnboundSymbol("alpha/beta have no numeric binding");
      scalar = std::pow(b->alpha, sig.alpha_pow) * std::pow(b->beta, sig.beta_pow);
    }
    acc.add(scalar * valuate(part));
  }
  return acc.value();
}

double Valuator::valuate(const SymbolicCoefficient& c) {
  detail::KahanSum acc;
  for (const auto& [sym, part] : c.terms) {
    double scalar = 1.0;
    if (sym.c2 != 0 || sym.c3 != 0 || sym.c4 != 0) {
      const auto& ct = counterterms();
      scalar = std::pow(ct.c2, sym.c2) * std::pow(ct.c3, sym.c3) * std::pow(ct.c4, sym.c4);
    }
    acc.add(scalar * valuate(part));
  }
  return acc.value();
}

std::vector<double> Valuator::coefficients(const PowerSeries<SymbolicCoefficient>& s) {
  std::vector<double> out;
  out.reserve(s.coeffs.size());
  for (const auto& c : s.coeffs) out.push_back(valuate(c));
  return out;
}

double Valuator::valuate(const PowerSeries<SymbolicCoefficient>& s, double eps) {
  const auto c = coefficients(s);
  double v = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * eps + c[k];
  return v;
}

}  // namespace phi4
