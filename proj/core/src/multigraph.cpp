#include "phi4/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "phi4/error.hpp"

namespace phi4 {

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw InvalidArgument("negative vertex count");
  for (auto& e : edges_) {
    if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw InvalidArgument("edge endpoint out of range");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
}

int Multigraph::leg_degree(int v) const {
  int d = 0;
  for (const auto& e : edges_) d += (e.u == v) + (e.v == v);
  return d;
}

std::vector<int> Multigraph::leg_degrees() const {
  std::vector<int> d(static_cast<std::size_t>(vertex_count_), 0);
  for (const auto& e : edges_) {
    ++d[static_cast<std::size_t>(e.u)];
    ++d[static_cast<std::size_t>(e.v)];
  }
  return d;
}

int Multigraph::multiplicity(int u, int v) const {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), key);
  return static_cast<int>(hi - lo);
}

std::vector<int> multiplicity_matrix(const Multigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> a(n * n, 0);
  for (const auto& e : g.edges()) {
    ++a[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)];
    ++a[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)];
  }
  return a;
}

Multigraph from_multiplicity_matrix(int n, std::span<const int> matrix) {
  std::vector<Edge> edges;
  const auto un = static_cast<std::size_t>(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int m = matrix[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)];
      for (int c = 0; c < m; ++c) edges.push_back({i, j});
    }
  }
  return Multigraph(n, std::move(edges));
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  const int shift = a.vertex_count();
  for (const auto& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Multigraph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

Multigraph relabel(const Multigraph& g, std::span<const int> new_label) {
  if (static_cast<int>(new_label.size()) != g.vertex_count()) {
    throw InvalidArgument("relabel: permutation size mismatch");
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    edges.push_back({new_label[static_cast<std::size_t>(e.u)],
                     new_label[static_cast<std::size_t>(e.v)]});
  }
  return Multigraph(g.vertex_count(), std::move(edges));
}

std::vector<std::vector<int>> connected_components(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& e : g.edges()) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    const int r = find(v);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(v);
  }
  return out;
}

Multigraph induced_subgraph(const Multigraph& g, std::span<const int> vertices) {
  std::vector<int> map(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    map[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    const int a = map[static_cast<std::size_t>(e.u)];
    const int b = map[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  return Multigraph(static_cast<int>(vertices.size()), std::move(edges));
}

Multigraph drop_isolated_vertices(const Multigraph& g) {
  const auto deg = g.leg_degrees();
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (deg[static_cast<std::size_t>(v)] > 0) keep.push_back(v);
  }
  if (static_cast<int>(keep.size()) == g.vertex_count()) return g;
  return induced_subgraph(g, keep);
}

int degree(const Multigraph& g) {
  return 3 * (g.vertex_count() - 1) - static_cast<int>(g.edge_count());
}

bool is_connected(const Multigraph& g) { return connected_components(g).size() <= 1; }

int loop_number(const Multigraph& g) {
  if (!is_connected(g)) throw InvalidArgument("loop_number: graph is disconnected");
  return static_cast<int>(g.edge_count()) - g.vertex_count() + 1;
}

std::string to_dot(const Multigraph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) os << "  v" << v << ";\n";
  for (const auto& e : g.edges()) os << "  v" << e.u << " -- v" << e.v << ";\n";
  os << "}\n";
  return os.str();
}

namespace diagrams {

Multigraph unit() { return Multigraph(); }
Multigraph point() { return Multigraph(1, {}); }

Multigraph banana(int multiplicity) {
  return Multigraph(2, std::vector<Edge>(static_cast<std::size_t>(multiplicity), Edge{0, 1}));
}

Multigraph double_triangle() {
  return Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}});
}

Multigraph bubble_with_tail() {
  return Multigraph(3, {{0, 1}, {0, 1}, {0, 1}, {0, 2}, {1, 2}});
}

Multigraph triangle() { return Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace diagrams

}  // namespace phi4
