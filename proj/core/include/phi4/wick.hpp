#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "phi4/diagram_sum.hpp"
#include "phi4/rational.hpp"

namespace phi4 {

struct WickConfig {
  // Largest total leg count 4a + 2b accepted by the enumerators.
  int max_legs = 24;
};

struct Leg {
  int vertex = 0;
  int index = 0;
};

// X factors are vertices 0..a-1 with four legs each, Y factors are vertices
// a..a+b-1 with two legs each. Legs are numbered vertex by vertex.
std::vector<Leg> make_legs(int a, int b);

// Pairs of leg numbers, each pair (i, j) with i < j, sorted by i.
using Matching = std::vector<std::pair<int, int>>;

// Calls visit once per non-flat perfect matching of the legs of X^a Y^b, in a
// fixed order (lowest unmatched leg first). Returns the number of matchings.
// Throws CapExceeded if 4a + 2b exceeds cfg.max_legs.
std::uint64_t enumerate_matchings(int a, int b, const std::function<void(const Matching&)>& visit,
                                  const WickConfig& cfg = {});

// Vertices are the factors, one edge per matched pair.
Multigraph matching_graph(int a, int b, const Matching& m);

// All non-flat matchings of X^a Y^b bucketed by isomorphism class. p0(0, 0)
// is the unit graph with coefficient 1. Results are memoized.
DiagramSum p0(int a, int b, const WickConfig& cfg = {});

// The connected classes of p0(a, b).
DiagramSum p(int a, int b, const WickConfig& cfg = {});

struct MatchingCount {
  Integer total;     // (4a+2b-1)!!
  Integer non_flat;  // sum of the coefficients of p0(a, b)
};
MatchingCount matching_count_check(int a, int b, const WickConfig& cfg = {});

}  // namespace phi4
