#pragma once

#include <map>
#include <vector>

#include "phi4/diagram_sum.hpp"
#include "phi4/hopf_poly.hpp"
#include "phi4/wick.hpp"

namespace phi4 {

// Diagram classes with Laurent-polynomial coefficients in alpha, beta.
class PolyDiagramSum {
 public:
  struct Term {
    Multigraph graph;
    ScalarPoly coeff;
  };
  using Map = std::map<CanonicalKey, Term>;

  void add(const DiagramSum& s, const ScalarPoly& scale);
  bool operator==(const PolyDiagramSum& o) const;
  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }

 private:
  Map terms_;
};

// Number of ways to obtain a given X^(n-2m) Y^m diagram by inserting m bubbles
// into X^n diagrams: 48^m n! / (m! (n-2m)!).
Integer insertion_count(int n, int m);

struct CommutativityRow {
  int m = 0;
  DiagramSum lhs;  // p(n-2m, m)
  DiagramSum rhs;  // ((n-2m)! m! / (48^m n!)) sum_{|S|=m} C_S p(n, 0)
  bool equal = false;
};

struct CommutativityReport {
  int n = 0;
  std::vector<CommutativityRow> rows;  // m = 1 .. n/2
  bool all_equal = false;
};

// Checks, per number m of contracted bubbles, that contracting bubbles in the
// X^n diagrams reproduces the diagrams of X^(n-2m) Y^m.
CommutativityReport verify_commutativity(int n, const WickConfig& cfg = {});

struct MixedReport {
  HMonomial monomial;
  PolyDiagramSum lhs;  // p applied to deform(X^a Y^b)
  PolyDiagramSum rhs;  // bubble subtraction on p(a, b) with bubble value eta/48
  bool equal = false;
};

MixedReport verify_mixed(HMonomial m, const WickConfig& cfg = {});

}  // namespace phi4
