#include "phi4/commutativity.hpp"

#include "phi4/error.hpp"
#include "phi4/hopf_graph.hpp"

namespace phi4 {

void PolyDiagramSum::add(const DiagramSum& s, const ScalarPoly& scale) {
  for (const auto& [key, term] : s) {
    auto [it, fresh] = terms_.try_emplace(key, Term{term.graph, {}});
    it->second.coeff += ScalarPoly(term.coeff) * scale;
    if (it->second.coeff.is_zero()) terms_.erase(it);
  }
}

bool PolyDiagramSum::operator==(const PolyDiagramSum& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (auto a = terms_.begin(), b = o.terms_.begin(); a != terms_.end(); ++a, ++b) {
    if (a->first != b->first || !(a->second.coeff == b->second.coeff)) return false;
  }
  return true;
}

Integer insertion_count(int n, int m) {
  Integer c = factorial(static_cast<unsigned>(n));
  for (int i = 0; i < m; ++i) c *= 48;
  return c / (factorial(static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(n - 2 * m)));
}

CommutativityReport verify_commutativity(int n, const WickConfig& cfg) {
  if (n < 2 || n > 5) throw InvalidArgument("verify_commutativity: n must lie in [2, 5]");
  const DiagramSum source = p(n, 0, cfg);

  // Contractions grouped by number of bubbles, with the sign of the reduction removed.
  std::map<int, DiagramSum> contracted;
  for (const auto& [key, term] : source) {
    for (const auto& t : bphz_reduce(term.graph).terms) {
      if (t.bubble_power == 0) continue;
      const Rational sign = t.bubble_power % 2 == 0 ? 1 : -1;
      contracted[t.bubble_power].add(t.contracted, term.coeff * t.coeff * sign);
    }
  }

  CommutativityReport report;
  report.n = n;
  report.all_equal = true;
  for (int m = 1; 2 * m <= n; ++m) {
    CommutativityRow row;
    row.m = m;
    row.lhs = p(n - 2 * m, m, cfg);
    const Rational scale = Rational(1) / Rational(insertion_count(n, m));
    if (auto it = contracted.find(m); it != contracted.end()) row.rhs = it->second.scaled(scale);
    row.equal = row.lhs == row.rhs;
    report.all_equal = report.all_equal && row.equal;
    report.rows.push_back(std::move(row));
  }
  return report;
}

MixedReport verify_mixed(HMonomial m, const WickConfig& cfg) {
  MixedReport r;
  r.monomial = m;
  for (const auto& [mono, c] : deform(HPolynomial::monomial(m))) r.lhs.add(p(mono.x_pow, mono.y_pow, cfg), c);

  // bubble value eta / 48
  const ScalarPoly bubble = ScalarPoly::eta_power(1, Rational(1, 48));
  for (const auto& [key, term] : p(m.x_pow, m.y_pow, cfg)) {
    for (const auto& t : bphz_reduce(term.graph).terms) {
      ScalarPoly w(term.coeff * t.coeff);
      for (int i = 0; i < t.bubble_power; ++i) w = w * bubble;
      r.rhs.add(DiagramSum::single(t.contracted), w);
    }
  }
  r.equal = r.lhs == r.rhs;
  return r;
}

}  // namespace phi4
