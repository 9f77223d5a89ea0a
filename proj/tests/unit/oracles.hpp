#pragma once

// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "phi4/multigraph.hpp"

namespace oracle {

// Lexicographically smallest upper-triangle multiplicity vector over all
// vertex permutations. Feasible up to about 8 vertices.
inline std::vector<int> brute_key(const phi4::Multigraph& g) {
  const int n = g.vertex_count();
  const auto m = phi4::multiplicity_matrix(g);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> cur;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) cur.push_back(m[static_cast<std::size_t>(perm[i] * n + perm[j])]);
    }
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  best.insert(best.begin(), n);
  return best;
}

// Random multigraph with up to max_mult parallel edges per pair.
inline phi4::Multigraph random_graph(std::mt19937_64& rng, int n, int max_mult, double density = 0.5) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> mult(1, max_mult);
  std::vector<phi4::Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (u(rng) < density) {
        const int k = mult(rng);
        for (int c = 0; c < k; ++c) edges.push_back({i, j});
      }
    }
  }
  return phi4::Multigraph(n, edges);
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Every perfect matching of the legs of X^a Y^b, by plain recursion, keeping
// those with no leg paired inside its own factor. Returns brute keys with
// multiplicities.
inline std::map<std::vector<int>, long> brute_wick(int a, int b) {
  std::vector<int> owner;
  for (int v = 0; v < a; ++v) owner.insert(owner.end(), 4, v);
  for (int v = 0; v < b; ++v) owner.insert(owner.end(), 2, a + v);
  const int legs = static_cast<int>(owner.size());
  std::map<std::vector<int>, long> out;
  std::vector<bool> used(static_cast<std::size_t>(legs), false);
  std::vector<phi4::Edge> edges;
  std::function<void()> rec = [&] {
    int first = -1;
    for (int i = 0; i < legs; ++i) {
      if (!used[static_cast<std::size_t>(i)]) {
        first = i;
        break;
      }
    }
    if (first < 0) {
      ++out[brute_key(phi4::Multigraph(a + b, edges))];
      return;
    }
    used[static_cast<std::size_t>(first)] = true;
    for (int j = first + 1; j < legs; ++j) {
      if (used[static_cast<std::size_t>(j)] || owner[static_cast<std::size_t>(j)] == owner[static_cast<std::size_t>(first)]) continue;
      used[static_cast<std::size_t>(j)] = true;
      const int u = owner[static_cast<std::size_t>(first)];
      const int v = owner[static_cast<std::size_t>(j)];
      edges.push_back({std::min(u, v), std::max(u, v)});
      rec();
      edges.pop_back();
      used[static_cast<std::size_t>(j)] = false;
    }
    used[static_cast<std::size_t>(first)] = false;
  };
  rec();
  return out;
}

// Modes of Z^3 with l1 norm at most N, built without the library.
inline std::vector<std::array<int, 3>> modes(int N) {
  std::vector<std::array<int, 3>> out;
  for (int x = -N; x <= N; ++x) {
    for (int y = -N; y <= N; ++y) {
      for (int z = -N; z <= N; ++z) {
        if (std::abs(x) + std::abs(y) + std::abs(z) <= N) out.push_back({x, y, z});
      }
    }
  }
  return out;
}

inline double prop(const std::array<int, 3>& k) {
  const double pi = 3.14159265358979323846;
  return 1.0 / (4.0 * pi * pi * (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]) + 1.0);
}

}  // namespace oracle
