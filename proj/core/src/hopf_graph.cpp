#include "phi4/hopf_graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <tuple>

#include "phi4/error.hpp"
#include "phi4/subgraphs.hpp"

namespace phi4 {

namespace {

Multigraph normalize(const Multigraph& g) { return drop_isolated_vertices(g); }

std::vector<Multigraph> components_of(const Multigraph& g) {
  std::vector<Multigraph> out;
  const Multigraph h = normalize(g);
  for (const auto& c : connected_components(h)) out.push_back(induced_subgraph(h, c));
  return out;
}

DiagramSum unit_sum() { return DiagramSum::single(Multigraph()); }

GraphTensorSum tensor_product(const GraphTensorSum& a, const GraphTensorSum& b) {
  GraphTensorSum out;
  for (const auto& [ka, ta] : a) {
    for (const auto& [kb, tb] : b) {
      out.add(disjoint_union(ta.left, tb.left), disjoint_union(ta.right, tb.right), ta.coeff * tb.coeff);
    }
  }
  return out;
}

using Memo = std::map<CanonicalKey, DiagramSum>;

DiagramSum antipode_of_product(const Multigraph& g, Memo& memo);

DiagramSum antipode_connected(const Multigraph& c, Memo& memo, int depth) {
  if (depth > 64) throw InternalError("antipode recursion too deep");
  const CanonicalKey key = canonicalize(c);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  DiagramSum result = DiagramSum::single(c, -1);
  for (const auto& s : divergent_subgraphs(c)) {
    const DiagramSum left = antipode_of_product(subgraph_of(c, s), memo);
    result.add(product(left, DiagramSum::single(contract(c, s))), -1);
  }
  memo.emplace(key, result);
  return result;
}

DiagramSum antipode_of_product(const Multigraph& g, Memo& memo) {
  DiagramSum out = unit_sum();
  for (const auto& c : components_of(g)) out = product(out, antipode_connected(c, memo, 0));
  return out;
}

// G restricted to the vertex set `outer` with each of the disjoint `inner`
// sets collapsed to a point.
Multigraph collapse(const Multigraph& g, std::uint32_t outer, const std::vector<std::uint32_t>& inner) {
  std::vector<int> target(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  for (auto m : inner) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (m >> v & 1U) target[static_cast<std::size_t>(v)] = next;
    }
    ++next;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if ((outer >> v & 1U) && target[static_cast<std::size_t>(v)] < 0) target[static_cast<std::size_t>(v)] = next++;
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (!(outer >> e.u & 1U) || !(outer >> e.v & 1U)) continue;
    const int a = target[static_cast<std::size_t>(e.u)];
    const int b = target[static_cast<std::size_t>(e.v)];
    if (a != b) edges.push_back({a, b});
  }
  return Multigraph(next, std::move(edges));
}

DiagramSum forest_antipode_connected(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint32_t> candidates;
  for (const auto& s : divergent_subgraphs(g)) {
    if (s.components.size() != 1) continue;
    std::uint32_t mask = 0;
    for (int v : s.vertices) mask |= 1U << v;
    candidates.push_back(mask);
  }
  const std::uint32_t whole = n >= 32 ? ~0U : (1U << n) - 1;

  DiagramSum out;
  std::vector<std::uint32_t> forest;
  auto compatible = [](std::uint32_t a, std::uint32_t b) {
    return (a & b) == 0 || (a & b) == a || (a & b) == b;
  };
  auto emit = [&]() {
    std::vector<std::uint32_t> all = forest;
    all.push_back(whole);
    Multigraph factors;
    for (auto outer : all) {
      // Maximal members of the forest strictly inside `outer`.
      std::vector<std::uint32_t> children;
      for (auto m : forest) {
        if (m == outer || (m & outer) != m) continue;
        const bool maximal = std::none_of(forest.begin(), forest.end(), [&](std::uint32_t o) {
          return o != m && o != outer && (o & outer) == o && (o & m) == m;
        });
        if (maximal) children.push_back(m);
      }
      factors = disjoint_union(factors, collapse(g, outer, children));
    }
    const Rational sign = forest.size() % 2 == 0 ? -1 : 1;
    out.add(normalize(factors), sign);
  };
  auto rec = [&](auto&& self, std::size_t from) -> void {
    emit();
    for (std::size_t i = from; i < candidates.size(); ++i) {
      if (!std::all_of(forest.begin(), forest.end(), [&](std::uint32_t f) { return compatible(f, candidates[i]); })) {
        continue;
      }
      forest.push_back(candidates[i]);
      self(self, i + 1);
      forest.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

using TripleKey = std::tuple<CanonicalKey, CanonicalKey, CanonicalKey>;

void require_connected(const Multigraph& g, const char* what) {
  if (!is_connected(normalize(g))) throw InvalidArgument(std::string(what) + ": graph is disconnected");
}

}  // namespace

void GraphTensorSum::add(const Multigraph& left, const Multigraph& right, const Rational& coeff) {
  if (coeff == 0) return;
  const Multigraph l = normalize(left);
  const Multigraph r = normalize(right);
  const CanonicalKey kl = canonicalize(l);
  const CanonicalKey kr = canonicalize(r);
  Key key{kl, kr};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), Term{from_key(kl), from_key(kr), coeff});
    return;
  }
  it->second.coeff += coeff;
  if (it->second.coeff == 0) terms_.erase(it);
}

void GraphTensorSum::add(const GraphTensorSum& o, const Rational& scale) {
  for (const auto& [key, t] : o.terms_) add(t.left, t.right, t.coeff * scale);
}

Rational GraphTensorSum::coefficient(const Multigraph& left, const Multigraph& right) const {
  auto it = terms_.find({canonicalize(normalize(left)), canonicalize(normalize(right))});
  return it == terms_.end() ? Rational(0) : it->second.coeff;
}

bool GraphTensorSum::operator==(const GraphTensorSum& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (auto a = terms_.begin(), b = o.terms_.begin(); a != terms_.end(); ++a, ++b) {
    if (a->first != b->first || a->second.coeff != b->second.coeff) return false;
  }
  return true;
}

GraphTensorSum coproduct(const Multigraph& g) {
  require_connected(g, "coproduct");
  const Multigraph h = normalize(g);
  GraphTensorSum out;
  if (h.is_unit()) {
    out.add(h, h, 1);
    return out;
  }
  out.add(h, Multigraph(), 1);
  out.add(Multigraph(), h, 1);
  for (const auto& s : divergent_subgraphs(h)) out.add(subgraph_of(h, s), contract(h, s), 1);
  return out;
}

GraphTensorSum coproduct_product(const Multigraph& g) {
  GraphTensorSum out;
  out.add(Multigraph(), Multigraph(), 1);
  for (const auto& c : components_of(g)) out = tensor_product(out, coproduct(c));
  return out;
}

bool coassociative(const Multigraph& g) {
  const GraphTensorSum d = coproduct(g);
  std::map<TripleKey, Rational> lhs;
  std::map<TripleKey, Rational> rhs;
  auto acc = [](std::map<TripleKey, Rational>& m, const Multigraph& a, const Multigraph& b, const Multigraph& c,
                const Rational& q) {
    auto& slot = m[{canonicalize(a), canonicalize(b), canonicalize(c)}];
    slot += q;
  };
  for (const auto& [key, t] : d) {
    for (const auto& [k2, t2] : coproduct_product(t.left)) acc(lhs, t2.left, t2.right, t.right, t.coeff * t2.coeff);
    for (const auto& [k2, t2] : coproduct_product(t.right)) acc(rhs, t.left, t2.left, t2.right, t.coeff * t2.coeff);
  }
  std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
  return lhs == rhs;
}

DiagramSum antipode(const Multigraph& g) {
  Memo memo;
  return antipode_of_product(g, memo);
}

DiagramSum forest_antipode(const Multigraph& g) {
  DiagramSum out = unit_sum();
  for (const auto& c : components_of(g)) out = product(out, forest_antipode_connected(c));
  return out;
}

DiagramSum twisted_antipode(const Multigraph& g) {
  DiagramSum out = unit_sum();
  Memo memo;
  for (const auto& c : components_of(g)) {
    if (degree(c) > 0) return {};
    out = product(out, antipode_connected(c, memo, 0));
  }
  return out;
}

DiagramSum bphz_character(const Multigraph& g) {
  DiagramSum out;
  for (const auto& [key, t] : coproduct(g)) {
    out.add(product(twisted_antipode(t.left), DiagramSum::single(t.right)), t.coeff);
  }
  return out;
}

std::vector<std::pair<int, int>> bubbles(const Multigraph& g) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (g.multiplicity(u, v) == 3) out.emplace_back(u, v);
    }
  }
  return out;
}

BphzReduction bphz_reduce(const Multigraph& g) {
  require_connected(g, "bphz_reduce");
  const auto bs = bubbles(g);
  std::map<std::pair<int, CanonicalKey>, BphzReduction::Term> acc;
  std::vector<std::vector<int>> chosen;
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);

  auto emit = [&]() {
    const int k = static_cast<int>(chosen.size());
    const Multigraph c = k == 0 ? canonical_form(g) : contract(g, full_selection(g, chosen));
    const Rational sign = k % 2 == 0 ? 1 : -1;
    auto [it, fresh] = acc.try_emplace({k, canonicalize(c)}, BphzReduction::Term{k, c, 0});
    it->second.coeff += sign;
  };
  auto rec = [&](auto&& self, std::size_t from) -> void {
    emit();
    for (std::size_t i = from; i < bs.size(); ++i) {
      const auto [u, v] = bs[i];
      if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
      chosen.push_back({u, v});
      self(self, i + 1);
      chosen.pop_back();
      used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(rec, 0);

  BphzReduction out;
  for (auto& [key, term] : acc) {
    if (term.coeff != 0) out.terms.push_back(std::move(term));
  }
  return out;
}

DiagramSum BphzReduction::with_bubble_graphs() const {
  DiagramSum out;
  for (const auto& t : terms) {
    Multigraph g = t.contracted;
    for (int i = 0; i < t.bubble_power; ++i) g = disjoint_union(g, diagrams::bubble());
    out.add(drop_isolated_vertices(g), t.coeff);
  }
  return out;
}

}  // namespace phi4
