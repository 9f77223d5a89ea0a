#include "phi4/subgraphs.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "phi4/canonical.hpp"
#include "phi4/error.hpp"

namespace phi4 {

namespace {

std::vector<int> members(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (mask >> v & 1U) out.push_back(v);
  }
  return out;
}

void validate(const Multigraph& g, const SubgraphSelection& s) {
  if (s.components.empty() || s.edge_indices.empty()) {
    throw InvalidArgument("subgraph selection is empty");
  }
  std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t c = 0; c < s.components.size(); ++c) {
    if (s.components[c].size() < 2) throw InvalidArgument("selection component has fewer than two vertices");
    for (int v : s.components[c]) {
      if (v < 0 || v >= g.vertex_count()) throw InvalidArgument("selection vertex out of range");
      if (owner[static_cast<std::size_t>(v)] >= 0) throw InvalidArgument("selection components overlap");
      owner[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
  }
  std::vector<int> expected;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int a = owner[static_cast<std::size_t>(edges[i].u)];
    if (a >= 0 && a == owner[static_cast<std::size_t>(edges[i].v)]) expected.push_back(static_cast<int>(i));
  }
  if (expected != s.edge_indices) throw InvalidArgument("selection is not a full subgraph of the parent");
}

}  // namespace

SubgraphSelection full_selection(const Multigraph& g, std::vector<std::vector<int>> components) {
  SubgraphSelection s;
  for (auto& c : components) std::sort(c.begin(), c.end());
  std::sort(components.begin(), components.end());
  std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (components[c].size() < 2) throw InvalidArgument("selection component has fewer than two vertices");
    for (int v : components[c]) {
      if (v < 0 || v >= g.vertex_count()) throw InvalidArgument("selection vertex out of range");
      if (owner[static_cast<std::size_t>(v)] >= 0) throw InvalidArgument("selection components overlap");
      owner[static_cast<std::size_t>(v)] = static_cast<int>(c);
      s.vertices.push_back(v);
    }
    if (!is_connected(induced_subgraph(g, components[c]))) {
      throw InvalidArgument("selection component is not connected");
    }
  }
  std::sort(s.vertices.begin(), s.vertices.end());
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int a = owner[static_cast<std::size_t>(edges[i].u)];
    if (a >= 0 && a == owner[static_cast<std::size_t>(edges[i].v)]) s.edge_indices.push_back(static_cast<int>(i));
  }
  s.components = std::move(components);
  return s;
}

std::vector<SubgraphSelection> divergent_subgraphs(const Multigraph& g) {
  if (!is_connected(g)) throw InvalidArgument("divergent_subgraphs: graph is disconnected");
  const int n = g.vertex_count();
  if (n > 24) throw SizeExceeded("divergent_subgraphs: too many vertices");

  // Candidate components: connected induced subgraphs of degree <= 0.
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    const auto vs = members(mask, n);
    const auto sub = induced_subgraph(g, vs);
    if (sub.edge_count() == g.edge_count()) continue;  // the whole graph is not proper
    if (is_connected(sub) && degree(sub) <= 0) candidates.push_back(mask);
  }

  std::vector<SubgraphSelection> out;
  std::vector<std::uint32_t> family;
  auto extend = [&](auto&& self, std::size_t from, std::uint32_t used) -> void {
    for (std::size_t i = from; i < candidates.size(); ++i) {
      if (candidates[i] & used) continue;
      family.push_back(candidates[i]);
      std::vector<std::vector<int>> comps;
      for (auto m : family) comps.push_back(members(m, n));
      out.push_back(full_selection(g, std::move(comps)));
      self(self, i + 1, used | candidates[i]);
      family.pop_back();
    }
  };
  extend(extend, 0, 0);
  return out;
}

Multigraph subgraph_of(const Multigraph& g, const SubgraphSelection& s) {
  validate(g, s);
  Multigraph out;
  for (const auto& c : s.components) out = disjoint_union(out, induced_subgraph(g, c));
  return out;
}

Multigraph contract(const Multigraph& g, const SubgraphSelection& s) {
  validate(g, s);
  std::vector<int> target(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  for (const auto& c : s.components) {
    for (int v : c) target[static_cast<std::size_t>(v)] = next;
    ++next;
  }
  for (auto& t : target) {
    if (t < 0) t = next++;
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    const int a = target[static_cast<std::size_t>(e.u)];
    const int b = target[static_cast<std::size_t>(e.v)];
    if (a != b) edges.push_back({a, b});
  }
  return canonical_form(Multigraph(next, std::move(edges)));
}

}  // namespace phi4
