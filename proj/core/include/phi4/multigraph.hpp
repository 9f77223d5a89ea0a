#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace phi4 {

// Unordered vertex pair, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

// A vacuum Feynman diagram: finitely many vertices and a multiset of edges
// between distinct vertices. Edges are kept sorted, so two labelled graphs with
// the same structure compare equal. The zero-vertex graph is the unit.
//
// Isomorphism classes are handled by canonicalize() in canonical.hpp.
class Multigraph {
 public:
  Multigraph() = default;

  // Throws InvalidArgument on self-loops or out-of-range endpoints.
  Multigraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool is_unit() const noexcept { return vertex_count_ == 0; }

  // Number of edge ends at v (the number of legs of the corresponding factor).
  int leg_degree(int v) const;
  std::vector<int> leg_degrees() const;
  int multiplicity(int u, int v) const;

  bool operator==(const Multigraph&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// Dense symmetric multiplicity matrix, row-major, n*n entries.
std::vector<int> multiplicity_matrix(const Multigraph& g);
Multigraph from_multiplicity_matrix(int n, std::span<const int> matrix);

// Vertices of `b` are shifted by a.vertex_count().
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

// Vertex v of g becomes vertex new_label[v]; new_label must be a permutation.
Multigraph relabel(const Multigraph& g, std::span<const int> new_label);

// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Multigraph& g);

// The subgraph spanned by the given vertices and all edges among them, with
// vertices renumbered in the given order.
Multigraph induced_subgraph(const Multigraph& g, std::span<const int> vertices);

// Isolated vertices are units of the graph algebra (their valuation is 1).
Multigraph drop_isolated_vertices(const Multigraph& g);

// Power-counting degree 3(|V|-1) - |E|; the graph is divergent iff degree <= 0.
int degree(const Multigraph& g);

// True iff the underlying simple graph is connected. The single vertex is
// connected; the unit (no vertices) is treated as connected as well.
bool is_connected(const Multigraph& g);

// |E| - |V| + 1. Throws InvalidArgument for disconnected graphs.
int loop_number(const Multigraph& g);

// Graphviz text; parallel edges are emitted once per copy, sorted.
std::string to_dot(const Multigraph& g, std::string_view name = "G");

// Named diagrams that show up repeatedly.
namespace diagrams {

Multigraph unit();
Multigraph point();
// Two vertices joined by `multiplicity` parallel edges.
Multigraph banana(int multiplicity);
inline Multigraph bubble() { return banana(3); }
// Three vertices, every pair joined by a double edge (the vacuum-energy diagram).
Multigraph double_triangle();
// Two four-valent vertices sharing a triple edge, each also joined to one
// two-valent vertex: the unique connected class arising from X^2 Y.
Multigraph bubble_with_tail();
Multigraph triangle();

}  // namespace diagrams

}  // namespace phi4
