#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "phi4/multigraph.hpp"

namespace phi4 {

inline constexpr int kMaxCanonicalVertices = 12;

// Byte string identifying an isomorphism class: the vertex count followed by
// the upper-triangle multiplicities under the canonical labelling.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }
  // Lowercase hex, usable as a file name.
  std::string hex() const;

  auto operator<=>(const CanonicalKey&) const = default;

 private:
  std::string bytes_;
};

// Throws SizeExceeded above kMaxCanonicalVertices.
CanonicalKey canonicalize(const Multigraph& g);

// Permutation mapping g's vertices onto the canonical labelling:
// relabel(g, canonical_labeling(g)) == canonical_form(g).
std::vector<int> canonical_labeling(const Multigraph& g);

// The representative of g's class whose labelling produced the key.
Multigraph canonical_form(const Multigraph& g);
Multigraph from_key(const CanonicalKey& key);

bool isomorphic(const Multigraph& a, const Multigraph& b);

}  // namespace phi4

template <>
struct std::hash<phi4::CanonicalKey> {
  std::size_t operator()(const phi4::CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes());
  }
};
