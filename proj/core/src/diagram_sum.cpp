#include "phi4/diagram_sum.hpp"

namespace phi4 {

DiagramSum DiagramSum::single(const Multigraph& g, const Rational& coeff) {
  DiagramSum s;
  s.add(g, coeff);
  return s;
}

void DiagramSum::add(const Multigraph& g, const Rational& coeff) {
  const auto key = canonicalize(g);
  if (coeff == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, Term{from_key(key), coeff});
    return;
  }
  it->second.coeff += coeff;
  if (it->second.coeff == 0) terms_.erase(it);
}

void DiagramSum::add_canonical(const CanonicalKey& key, const Multigraph& graph, const Rational& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, Term{graph, coeff});
    return;
  }
  it->second.coeff += coeff;
  if (it->second.coeff == 0) terms_.erase(it);
}

void DiagramSum::add(const DiagramSum& other, const Rational& scale) {
  if (scale == 0) return;
  for (const auto& [key, term] : other.terms_) add_canonical(key, term.graph, term.coeff * scale);
}

Rational DiagramSum::coefficient(const Multigraph& g) const { return coefficient(canonicalize(g)); }

Rational DiagramSum::coefficient(const CanonicalKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second.coeff;
}

Rational DiagramSum::total() const {
  Rational t = 0;
  for (const auto& [key, term] : terms_) t += term.coeff;
  return t;
}

DiagramSum DiagramSum::scaled(const Rational& s) const {
  DiagramSum out;
  out.add(*this, s);
  return out;
}

DiagramSum DiagramSum::connected_part() const {
  DiagramSum out;
  for (const auto& [key, term] : terms_) {
    if (is_connected(term.graph)) out.add_canonical(key, term.graph, term.coeff);
  }
  return out;
}

bool DiagramSum::operator==(const DiagramSum& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b) {
    if (a->first != b->first || a->second.coeff != b->second.coeff) return false;
  }
  return true;
}

DiagramSum operator+(DiagramSum a, const DiagramSum& b) {
  a += b;
  return a;
}

DiagramSum operator-(DiagramSum a, const DiagramSum& b) {
  a -= b;
  return a;
}

DiagramSum operator*(const Rational& s, const DiagramSum& a) { return a.scaled(s); }

DiagramSum product(const DiagramSum& a, const DiagramSum& b) {
  DiagramSum out;
  for (const auto& [ka, ta] : a) {
    for (const auto& [kb, tb] : b) out.add(disjoint_union(ta.graph, tb.graph), ta.coeff * tb.coeff);
  }
  return out;
}

}  // namespace phi4
