#pragma once

#include <map>
#include <optional>

#include "phi4/canonical.hpp"
#include "phi4/multigraph.hpp"
#include "phi4/rational.hpp"

namespace phi4 {

// Finite linear combination of isomorphism classes of multigraphs with exact
// rational coefficients. Representatives are stored in canonical form; zero
// coefficients are never stored.
class DiagramSum {
 public:
  struct Term {
    Multigraph graph;
    Rational coeff;
  };
  using Map = std::map<CanonicalKey, Term>;

  DiagramSum() = default;
  static DiagramSum single(const Multigraph& g, const Rational& coeff = 1);

  void add(const Multigraph& g, const Rational& coeff);
  // Caller guarantees key == canonicalize(graph).
  void add_canonical(const CanonicalKey& key, const Multigraph& graph, const Rational& coeff);
  void add(const DiagramSum& other, const Rational& scale = 1);

  Rational coefficient(const Multigraph& g) const;
  Rational coefficient(const CanonicalKey& key) const;
  // Sum of all coefficients.
  Rational total() const;

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }

  DiagramSum scaled(const Rational& s) const;
  DiagramSum connected_part() const;

  DiagramSum& operator+=(const DiagramSum& o) {
    add(o);
    return *this;
  }
  DiagramSum& operator-=(const DiagramSum& o) {
    add(o, -1);
    return *this;
  }

  bool operator==(const DiagramSum& o) const;

 private:
  Map terms_;
};

DiagramSum operator+(DiagramSum a, const DiagramSum& b);
DiagramSum operator-(DiagramSum a, const DiagramSum& b);
DiagramSum operator*(const Rational& s, const DiagramSum& a);
// Bilinear extension of disjoint union.
DiagramSum product(const DiagramSum& a, const DiagramSum& b);

}  // namespace phi4
