#include "phi4/wick.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "phi4/error.hpp"

namespace phi4 {

namespace {

void check_cap(int a, int b, const WickConfig& cfg) {
  if (a < 0 || b < 0) throw InvalidArgument("negative factor count");
  const int legs = 4 * a + 2 * b;
  if (legs > cfg.max_legs) {
    throw CapExceeded("X^" + std::to_string(a) + " Y^" + std::to_string(b) + " has " + std::to_string(legs) +
                      " legs, above the cap of " + std::to_string(cfg.max_legs));
  }
}

// Enumerates symmetric zero-diagonal matrices with prescribed row sums. Each
// matrix is the multiplicity pattern of a family of matchings; the family has
// prod_i d_i! / prod_{i<j} m_ij! members (choose which legs of every vertex go
// to each neighbour, then pair them up across each vertex pair).
class MatrixEnumerator {
 public:
  explicit MatrixEnumerator(std::vector<int> row_sums)
      : n_(static_cast<int>(row_sums.size())),
        remaining_(std::move(row_sums)),
        m_(static_cast<std::size_t>(n_ * n_), 0) {}

  template <typename Visit>
  void run(Visit&& visit) {
    step(0, 1, visit);
  }

  const std::vector<int>& matrix() const { return m_; }

 private:
  template <typename Visit>
  void step(int i, int j, Visit& visit) {
    if (i >= n_ - 1) {
      if (n_ == 0 || remaining_[static_cast<std::size_t>(n_ - 1)] == 0) visit(m_);
      return;
    }
    const auto ui = static_cast<std::size_t>(i);
    if (j == n_) {
      if (remaining_[ui] == 0) step(i + 1, i + 2, visit);
      return;
    }
    int later = 0;
    for (int k = j + 1; k < n_; ++k) later += remaining_[static_cast<std::size_t>(k)];
    const auto uj = static_cast<std::size_t>(j);
    const int hi = std::min(remaining_[ui], remaining_[uj]);
    const int lo = std::max(0, remaining_[ui] - later);
    for (int m = lo; m <= hi; ++m) {
      set(i, j, m);
      remaining_[ui] -= m;
      remaining_[uj] -= m;
      step(i, j + 1, visit);
      remaining_[ui] += m;
      remaining_[uj] += m;
    }
    set(i, j, 0);
  }

  void set(int i, int j, int m) {
    m_[static_cast<std::size_t>(i * n_ + j)] = m;
    m_[static_cast<std::size_t>(j * n_ + i)] = m;
  }

  int n_;
  std::vector<int> remaining_;
  std::vector<int> m_;
};

DiagramSum compute_p0(int a, int b) {
  if (a == 0 && b == 0) return DiagramSum::single(Multigraph());
  std::vector<int> row_sums;
  for (int i = 0; i < a; ++i) row_sums.push_back(4);
  for (int i = 0; i < b; ++i) row_sums.push_back(2);
  const int n = a + b;

  Integer numerator = 1;
  for (int d : row_sums) numerator *= factorial(static_cast<unsigned>(d));

  // Denominators only involve small factorials.
  std::vector<Integer> small_fact;
  for (unsigned k = 0; k <= 4; ++k) small_fact.push_back(factorial(k));

  DiagramSum out;
  MatrixEnumerator en(row_sums);
  en.run([&](const std::vector<int>& m) {
    Integer denom = 1;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) denom *= small_fact[static_cast<std::size_t>(m[static_cast<std::size_t>(i * n + j)])];
    }
    const Multigraph g = from_multiplicity_matrix(n, m);
    const CanonicalKey key = canonicalize(g);
    out.add_canonical(key, from_key(key), Rational(numerator / denom));
  });
  return out;
}

std::shared_mutex cache_mutex;
std::map<std::pair<int, int>, DiagramSum> cache;

}  // namespace

std::vector<Leg> make_legs(int a, int b) {
  std::vector<Leg> legs;
  for (int v = 0; v < a + b; ++v) {
    const int count = v < a ? 4 : 2;
    for (int k = 0; k < count; ++k) legs.push_back({v, k});
  }
  return legs;
}

std::uint64_t enumerate_matchings(int a, int b, const std::function<void(const Matching&)>& visit,
                                  const WickConfig& cfg) {
  check_cap(a, b, cfg);
  const auto legs = make_legs(a, b);
  const auto count = legs.size();
  std::vector<char> used(count, 0);
  Matching current;
  current.reserve(count / 2);
  std::uint64_t produced = 0;

  auto rec = [&](auto&& self, std::size_t first) -> void {
    while (first < count && used[first]) ++first;
    if (first == count) {
      ++produced;
      visit(current);
      return;
    }
    used[first] = 1;
    for (std::size_t j = first + 1; j < count; ++j) {
      if (used[j] || legs[j].vertex == legs[first].vertex) continue;
      used[j] = 1;
      current.emplace_back(static_cast<int>(first), static_cast<int>(j));
      self(self, first + 1);
      current.pop_back();
      used[j] = 0;
    }
    used[first] = 0;
  };
  rec(rec, 0);
  return produced;
}

Multigraph matching_graph(int a, int b, const Matching& m) {
  const auto legs = make_legs(a, b);
  std::vector<Edge> edges;
  edges.reserve(m.size());
  for (const auto& [i, j] : m) {
    edges.push_back({legs[static_cast<std::size_t>(i)].vertex, legs[static_cast<std::size_t>(j)].vertex});
  }
  return Multigraph(a + b, std::move(edges));
}

DiagramSum p0(int a, int b, const WickConfig& cfg) {
  check_cap(a, b, cfg);
  const std::pair key{a, b};
  {
    std::shared_lock lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  DiagramSum result = compute_p0(a, b);
  std::unique_lock lock(cache_mutex);
  return cache.try_emplace(key, std::move(result)).first->second;
}

DiagramSum p(int a, int b, const WickConfig& cfg) { return p0(a, b, cfg).connected_part(); }

MatchingCount matching_count_check(int a, int b, const WickConfig& cfg) {
  const int legs = 4 * a + 2 * b;
  return {double_factorial_odd(static_cast<unsigned>(legs / 2)), p0(a, b, cfg).total().get_num()};
}

}  // namespace phi4
