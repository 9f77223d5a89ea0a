#include "loop_sum.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

#include "phi4/error.hpp"

namespace phi4::detail {

namespace {

struct Plan {
  std::vector<int> chords;                 // edge indices in summation order
  std::vector<int> tree;                   // edge indices
  std::vector<std::vector<int>> sigma;     // [tree][chord position] in {-1, 0, 1}
  std::vector<std::vector<int>> finishing; // chord position -> tree positions completed there
  double constant = 1.0;                   // tree edges on no cycle carry zero momentum
};

Plan make_plan(int n, const std::vector<LoopEdge>& edges) {
  const int e_count = static_cast<int>(edges.size());
  std::vector<int> order(static_cast<std::size_t>(e_count));
  std::iota(order.begin(), order.end(), 0);
  // Widest kernels go into the tree so that loop momenta range over small balls.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return edges[static_cast<std::size_t>(a)].kernel->radius() > edges[static_cast<std::size_t>(b)].kernel->radius();
  });
  std::vector<int> parent_uf(static_cast<std::size_t>(n));
  std::iota(parent_uf.begin(), parent_uf.end(), 0);
  auto find = [&](int x) {
    while (parent_uf[static_cast<std::size_t>(x)] != x) x = parent_uf[static_cast<std::size_t>(x)];
    return x;
  };
  Plan plan;
  std::vector<int> chord_pool;
  for (int e : order) {
    const auto& edge = edges[static_cast<std::size_t>(e)];
    const int a = find(edge.u);
    const int b = find(edge.v);
    if (a != b) {
      parent_uf[static_cast<std::size_t>(a)] = b;
      plan.tree.push_back(e);
    } else {
      chord_pool.push_back(e);
    }
  }
  if (static_cast<int>(plan.tree.size()) != n - 1) throw InvalidArgument("loop_sum: graph is disconnected");

  // Root the tree at vertex 0.
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
  for (std::size_t t = 0; t < plan.tree.size(); ++t) {
    const auto& edge = edges[static_cast<std::size_t>(plan.tree[t])];
    adj[static_cast<std::size_t>(edge.u)].emplace_back(edge.v, static_cast<int>(t));
    adj[static_cast<std::size_t>(edge.v)].emplace_back(edge.u, static_cast<int>(t));
  }
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[0] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (auto [y, t] : adj[static_cast<std::size_t>(x)]) {
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      parent[static_cast<std::size_t>(y)] = x;
      parent_edge[static_cast<std::size_t>(y)] = t;
      depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
      stack.push_back(y);
    }
  }

  // Coefficients of each chord momentum in each tree momentum: the chord
  // carries k from u to v, which returns from v to u through the tree.
  const std::size_t T = plan.tree.size();
  std::vector<std::vector<int>> coef(T, std::vector<int>(chord_pool.size(), 0));
  for (std::size_t c = 0; c < chord_pool.size(); ++c) {
    const auto& chord = edges[static_cast<std::size_t>(chord_pool[c])];
    int x = chord.v;
    int y = chord.u;
    while (x != y) {
      if (depth[static_cast<std::size_t>(x)] >= depth[static_cast<std::size_t>(y)]) {
        const int t = parent_edge[static_cast<std::size_t>(x)];
        const auto& te = edges[static_cast<std::size_t>(plan.tree[static_cast<std::size_t>(t)])];
        coef[static_cast<std::size_t>(t)][c] = te.u == x ? 1 : -1;
        x = parent[static_cast<std::size_t>(x)];
      } else {
        const int t = parent_edge[static_cast<std::size_t>(y)];
        const auto& te = edges[static_cast<std::size_t>(plan.tree[static_cast<std::size_t>(t)])];
        coef[static_cast<std::size_t>(t)][c] = te.u == parent[static_cast<std::size_t>(y)] ? 1 : -1;
        y = parent[static_cast<std::size_t>(y)];
      }
    }
  }

  // Greedy chord order: complete as many tree momenta as early as possible.
  std::vector<char> placed(chord_pool.size(), 0);
  std::vector<std::size_t> chord_order;
  auto complete_after = [&](std::size_t extra) {
    int count = 0;
    for (std::size_t t = 0; t < T; ++t) {
      bool any = false;
      bool done = true;
      for (std::size_t c = 0; c < chord_pool.size(); ++c) {
        if (coef[t][c] == 0) continue;
        any = true;
        if (!placed[c] && c != extra) done = false;
      }
      if (any && done) ++count;
    }
    return count;
  };
  while (chord_order.size() < chord_pool.size()) {
    std::size_t best = chord_pool.size();
    int best_count = -1;
    for (std::size_t c = 0; c < chord_pool.size(); ++c) {
      if (placed[c]) continue;
      const int cnt = complete_after(c);
      const bool better =
          cnt > best_count ||
          (cnt == best_count && edges[static_cast<std::size_t>(chord_pool[c])].kernel->radius() <
                                    edges[static_cast<std::size_t>(chord_pool[best])].kernel->radius());
      if (better) {
        best = c;
        best_count = cnt;
      }
    }
    placed[best] = 1;
    chord_order.push_back(best);
  }

  const std::size_t L = chord_order.size();
  for (std::size_t j = 0; j < L; ++j) plan.chords.push_back(chord_pool[chord_order[j]]);
  plan.sigma.assign(T, std::vector<int>(L, 0));
  plan.finishing.assign(L, {});
  for (std::size_t t = 0; t < T; ++t) {
    int last = -1;
    for (std::size_t j = 0; j < L; ++j) {
      plan.sigma[t][j] = coef[t][chord_order[j]];
      if (plan.sigma[t][j] != 0) last = static_cast<int>(j);
    }
    if (last < 0) {
      plan.constant *= edges[static_cast<std::size_t>(plan.tree[t])].kernel->at({0, 0, 0});
    } else {
      plan.finishing[static_cast<std::size_t>(last)].push_back(static_cast<int>(t));
    }
  }
  return plan;
}

class Runner {
 public:
  Runner(const Plan& plan, const std::vector<LoopEdge>& edges, std::uint64_t budget,
         std::atomic<std::uint64_t>& shared_work, std::atomic<bool>& abort)
      : plan_(plan), edges_(edges), budget_(budget), shared_work_(shared_work), abort_(abort),
        tm_(plan.tree.size(), Mode{0, 0, 0}) {
    for (int c : plan.chords) balls_.push_back(&ball(edges[static_cast<std::size_t>(c)].kernel->radius()));
  }

  // Sum with the first chord fixed to its i-th ball mode.
  double run_first(std::size_t i) {
    KahanSum acc;
    acc_ = &acc;
    descend(0, 1.0, static_cast<long>(i));
    flush();
    return acc.value();
  }

  std::size_t first_ball_size() const { return balls_.empty() ? 1 : balls_[0]->size(); }
  std::uint64_t local_work() const { return total_local_; }

 private:
  const std::vector<Mode>& ball(int R) {
    auto it = ball_cache_.find(R);
    if (it == ball_cache_.end()) it = ball_cache_.emplace(R, Cutoff(R).modes()).first;
    return it->second;
  }

  void flush() {
    if (pending_ == 0) return;
    const std::uint64_t total = shared_work_.fetch_add(pending_) + pending_;
    total_local_ += pending_;
    pending_ = 0;
    if (total > budget_) abort_ = true;
  }

  void descend(std::size_t j, double prod, long only) {
    if (j == plan_.chords.size()) {
      acc_->add(prod);
      return;
    }
    if (abort_) return;
    const auto& modes = *balls_[j];
    const auto& chord_kernel = *edges_[static_cast<std::size_t>(plan_.chords[j])].kernel;
    const std::size_t lo = only >= 0 ? static_cast<std::size_t>(only) : 0;
    const std::size_t hi = only >= 0 ? lo + 1 : modes.size();
    for (std::size_t i = lo; i < hi; ++i) {
      const Mode& k = modes[i];
      if (++pending_ >= 4096) {
        flush();
        if (abort_) return;
      }
      for (std::size_t t = 0; t < tm_.size(); ++t) {
        const int s = plan_.sigma[t][j];
        if (s == 0) continue;
        tm_[t][0] += s * k[0];
        tm_[t][1] += s * k[1];
        tm_[t][2] += s * k[2];
      }
      double p = prod * chord_kernel.at(k);
      for (int t : plan_.finishing[j]) {
        const auto& kernel = *edges_[static_cast<std::size_t>(plan_.tree[static_cast<std::size_t>(t)])].kernel;
        const Mode& q = tm_[static_cast<std::size_t>(t)];
        if (l1_norm(q) > kernel.radius()) {
          p = 0.0;
          break;
        }
        p *= kernel.at(q);
      }
      if (p != 0.0) descend(j + 1, p, -1);
      for (std::size_t t = 0; t < tm_.size(); ++t) {
        const int s = plan_.sigma[t][j];
        if (s == 0) continue;
        tm_[t][0] -= s * k[0];
        tm_[t][1] -= s * k[1];
        tm_[t][2] -= s * k[2];
      }
    }
  }

  const Plan& plan_;
  const std::vector<LoopEdge>& edges_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& shared_work_;
  std::atomic<bool>& abort_;
  std::vector<Mode> tm_;
  std::map<int, std::vector<Mode>> ball_cache_;
  std::vector<const std::vector<Mode>*> balls_;
  KahanSum* acc_ = nullptr;
  std::uint64_t pending_ = 0;
  std::uint64_t total_local_ = 0;
};

}  // namespace

double loop_sum_estimate(int vertex_count, const std::vector<LoopEdge>& edges) {
  const Plan plan = make_plan(vertex_count, edges);
  double est = 1.0;
  for (int c : plan.chords) {
    est *= static_cast<double>(Cutoff::mode_count(edges[static_cast<std::size_t>(c)].kernel->radius()));
  }
  return est;
}

LoopSumResult loop_sum(int vertex_count, const std::vector<LoopEdge>& edges, std::uint64_t budget, int threads) {
  const Plan plan = make_plan(vertex_count, edges);
  if (plan.chords.empty()) return {plan.constant, 1};

  double est = 1.0;
  for (int c : plan.chords) {
    est *= static_cast<double>(Cutoff::mode_count(edges[static_cast<std::size_t>(c)].kernel->radius()));
  }
  if (est > static_cast<double>(budget)) {
    throw BudgetExceeded("momentum loop sum over budget", static_cast<std::uint64_t>(std::min(est, 1.8e19)));
  }

  std::atomic<std::uint64_t> work{0};
  std::atomic<bool> abort{false};
  const std::size_t first = Cutoff::mode_count(edges[static_cast<std::size_t>(plan.chords[0])].kernel->radius());
  std::vector<double> partial(first, 0.0);
  const int nthreads = std::max(1, std::min<int>(threads, static_cast<int>(first)));
  auto worker = [&](int t) {
    Runner r(plan, edges, budget, work, abort);
    for (std::size_t i = static_cast<std::size_t>(t); i < first; i += static_cast<std::size_t>(nthreads)) {
      partial[i] = r.run_first(i);
      if (abort) return;
    }
  };
  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  if (abort) throw BudgetExceeded("momentum loop sum exceeded its work budget", work.load());
  return {pairwise_sum(partial) * plan.constant, std::max<std::uint64_t>(work.load(), 1)};
}

}  // namespace phi4::detail
