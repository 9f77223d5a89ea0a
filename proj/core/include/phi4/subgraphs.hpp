#pragma once

#include <vector>

#include "phi4/multigraph.hpp"

namespace phi4 {

// A set of edges of a parent graph, grouped into vertex-disjoint connected
// components. Every component is full: it carries all parent edges between its
// vertices.
struct SubgraphSelection {
  std::vector<int> edge_indices;             // sorted, into parent.edges()
  std::vector<int> vertices;                 // sorted union of the components
  std::vector<std::vector<int>> components;  // sorted vertex lists

  bool operator==(const SubgraphSelection&) const = default;
};

// All proper, non-empty selections whose components are full, connected and
// of degree <= 0. Requires g connected.
std::vector<SubgraphSelection> divergent_subgraphs(const Multigraph& g);

// Builds a selection from a family of pairwise disjoint vertex sets, taking all
// parent edges inside each set. Throws InvalidArgument if a set is not
// connected in g, has fewer than two vertices, or sets overlap.
SubgraphSelection full_selection(const Multigraph& g, std::vector<std::vector<int>> components);

// The selected subgraph as a standalone (possibly disconnected) multigraph.
Multigraph subgraph_of(const Multigraph& g, const SubgraphSelection& s);

// Collapses every component of s to one vertex and drops its internal edges.
// The result is returned in canonical form.
Multigraph contract(const Multigraph& g, const SubgraphSelection& s);

}  // namespace phi4
