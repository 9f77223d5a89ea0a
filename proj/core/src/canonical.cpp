#include "phi4/canonical.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "phi4/error.hpp"

namespace phi4 {

namespace {

constexpr int kMax = kMaxCanonicalVertices;

struct Adjacency {
  int n = 0;
  std::array<std::array<int, kMax>, kMax> m{};
};

using Coloring = std::array<int, kMax>;

// Replace colors by dense ranks of the given per-vertex signatures.
template <typename Sig>
int rank_signatures(int n, std::array<Sig, kMax>& sig, Coloring& color) {
  std::array<int, kMax> order{};
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.begin() + n,
            [&](int a, int b) { return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)]; });
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    const auto v = static_cast<std::size_t>(order[static_cast<std::size_t>(i)]);
    if (i > 0 && sig[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])] != sig[v]) ++rank;
    color[v] = rank;
  }
  return n == 0 ? 0 : rank + 1;
}

// Colour refinement to the coarsest equitable partition finer than `color`.
// A cell's colour is the rank of its signature, so the result depends only on
// the isomorphism type of (graph, colouring).
int refine(const Adjacency& a, Coloring& color) {
  const int n = a.n;
  using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
  std::array<Signature, kMax> sig;
  int cells = -1;
  for (;;) {
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.first = color[static_cast<std::size_t>(v)];
      s.second.clear();
      for (int w = 0; w < n; ++w) {
        const int mult = a.m[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
        if (mult > 0) s.second.emplace_back(color[static_cast<std::size_t>(w)], mult);
      }
      std::sort(s.second.begin(), s.second.end());
    }
    const int next = rank_signatures(n, sig, color);
    if (next == cells) return cells;
    cells = next;
  }
}

bool twins(const Adjacency& a, int u, int v) {
  for (int w = 0; w < a.n; ++w) {
    if (w == u || w == v) continue;
    if (a.m[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] !=
        a.m[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) {
      return false;
    }
  }
  return true;
}

struct Search {
  const Adjacency& a;
  std::string best;
  Coloring best_labeling{};
  bool have_best = false;

  std::string leaf_key(const Coloring& color) const {
    std::array<int, kMax> inv{};
    for (int v = 0; v < a.n; ++v) inv[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])] = v;
    std::string key;
    key.reserve(1 + static_cast<std::size_t>(a.n * (a.n - 1) / 2));
    key.push_back(static_cast<char>(a.n));
    for (int i = 0; i < a.n; ++i) {
      for (int j = i + 1; j < a.n; ++j) {
        key.push_back(static_cast<char>(
            a.m[static_cast<std::size_t>(inv[static_cast<std::size_t>(i)])]
               [static_cast<std::size_t>(inv[static_cast<std::size_t>(j)])]));
      }
    }
    return key;
  }

  void run(const Coloring& color, int cells) {
    if (cells == a.n) {
      std::string key = leaf_key(color);
      if (!have_best || key < best) {
        best = std::move(key);
        best_labeling = color;
        have_best = true;
      }
      return;
    }
    // Target: the first cell (by colour) with more than one vertex.
    std::array<int, kMax> size{};
    for (int v = 0; v < a.n; ++v) ++size[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])];
    int target = 0;
    while (size[static_cast<std::size_t>(target)] < 2) ++target;

    std::vector<int> tried;
    for (int v = 0; v < a.n; ++v) {
      if (color[static_cast<std::size_t>(v)] != target) continue;
      // Swapping twins is an automorphism fixing the current partition, so
      // their subtrees produce the same leaf keys.
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(a, u, v); })) continue;
      tried.push_back(v);

      std::array<std::pair<int, int>, kMax> sig{};
      for (int w = 0; w < a.n; ++w) {
        sig[static_cast<std::size_t>(w)] = {color[static_cast<std::size_t>(w)], w == v ? 0 : 1};
      }
      Coloring next = color;
      rank_signatures(a.n, sig, next);
      const int next_cells = refine(a, next);
      run(next, next_cells);
    }
  }
};

Adjacency adjacency_of(const Multigraph& g) {
  if (g.vertex_count() > kMax) {
    throw SizeExceeded("canonicalize: " + std::to_string(g.vertex_count()) +
                       " vertices exceeds the limit of " + std::to_string(kMax));
  }
  Adjacency a;
  a.n = g.vertex_count();
  for (const auto& e : g.edges()) {
    auto& cell = a.m[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)];
    ++cell;
    if (cell > 255) throw SizeExceeded("canonicalize: edge multiplicity above 255");
    a.m[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = cell;
  }
  return a;
}

std::pair<std::string, Coloring> search(const Multigraph& g) {
  const Adjacency a = adjacency_of(g);
  Search s{a, {}, {}, false};
  Coloring color{};
  const int cells = refine(a, color);
  s.run(color, cells);
  if (!s.have_best) s.best = std::string(1, '\0');
  return {std::move(s.best), s.best_labeling};
}

}  // namespace

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c : bytes_) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

CanonicalKey canonicalize(const Multigraph& g) { return CanonicalKey(search(g).first); }

std::vector<int> canonical_labeling(const Multigraph& g) {
  auto [key, labeling] = search(g);
  return std::vector<int>(labeling.begin(), labeling.begin() + g.vertex_count());
}

Multigraph from_key(const CanonicalKey& key) {
  const auto& b = key.bytes();
  if (b.empty()) throw InvalidArgument("from_key: empty key");
  const int n = static_cast<unsigned char>(b[0]);
  if (b.size() != 1 + static_cast<std::size_t>(n * (n - 1) / 2)) {
    throw InvalidArgument("from_key: malformed key");
  }
  std::vector<Edge> edges;
  std::size_t pos = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int m = static_cast<unsigned char>(b[pos++]);
      for (int c = 0; c < m; ++c) edges.push_back({i, j});
    }
  }
  return Multigraph(n, std::move(edges));
}

Multigraph canonical_form(const Multigraph& g) { return from_key(canonicalize(g)); }

bool isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonicalize(a) == canonicalize(b);
}

}  // namespace phi4
