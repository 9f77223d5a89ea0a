#pragma once

#include <map>
#include <utility>
#include <vector>

#include "phi4/diagram_sum.hpp"

namespace phi4 {

// Linear combination of ordered pairs left (x) right. Products of graphs are
// disjoint unions; isolated vertices are dropped, so the unit is the empty graph.
class GraphTensorSum {
 public:
  struct Term {
    Multigraph left;
    Multigraph right;
    Rational coeff;
  };
  using Key = std::pair<CanonicalKey, CanonicalKey>;
  using Map = std::map<Key, Term>;

  void add(const Multigraph& left, const Multigraph& right, const Rational& coeff);
  void add(const GraphTensorSum& o, const Rational& scale = 1);

  Rational coefficient(const Multigraph& left, const Multigraph& right) const;
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }

  bool operator==(const GraphTensorSum& o) const;

 private:
  Map terms_;
};

// Extraction-contraction coproduct of a connected graph:
//   G (x) 1 + 1 (x) G + sum over divergent proper subgraphs g of g (x) G/g.
// Throws InvalidArgument for disconnected input.
GraphTensorSum coproduct(const Multigraph& g);

// Multiplicative extension of coproduct() to disjoint unions.
GraphTensorSum coproduct_product(const Multigraph& g);

// (Delta (x) id) Delta g == (id (x) Delta) Delta g for a connected g.
bool coassociative(const Multigraph& g);

// Recursive antipode A(G) = -G - sum A(g) G/g, extended multiplicatively.
DiagramSum antipode(const Multigraph& g);

// Zimmermann's forest formula A(G) = -sum_F (-1)^|F| C_F G over forests of
// connected divergent proper full subgraphs.
DiagramSum forest_antipode(const Multigraph& g);

// Antipode on divergent connected graphs and zero otherwise; multiplicative on
// disjoint unions.
DiagramSum twisted_antipode(const Multigraph& g);

// (twisted_antipode (x) id) Delta G, with products as disjoint unions.
DiagramSum bphz_character(const Multigraph& g);

// Renormalisation by bubble subtraction:
//   sum over sets S of disjoint bubbles of (-b)^|S| C_S G,
// where b stands for the value of one bubble. A bubble is a vertex pair joined
// by exactly three edges; G itself counts when G is the bubble.
struct BphzReduction {
  struct Term {
    int bubble_power = 0;
    Multigraph contracted;
    Rational coeff;
  };
  std::vector<Term> terms;  // sorted by (bubble_power, canonical key)

  // sum coeff * bubble^power * contracted as a diagram sum.
  DiagramSum with_bubble_graphs() const;
};
BphzReduction bphz_reduce(const Multigraph& g);

// Disjoint pairs {u, v} carrying exactly three parallel edges.
std::vector<std::pair<int, int>> bubbles(const Multigraph& g);

}  // namespace phi4
