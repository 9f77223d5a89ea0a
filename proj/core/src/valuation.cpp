#include "phi4/valuation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <numbers>

#include "kernel.hpp"
#include "loop_sum.hpp"
#include "phi4/error.hpp"

namespace phi4 {

using detail::FourierKernel;
using detail::KahanSum;

std::string_view to_string(ValuationMethod m) {
  switch (m) {
    case ValuationMethod::momentum: return "momentum";
    case ValuationMethod::grid: return "grid";
    case ValuationMethod::kernel: return "kernel";
  }
  return "unknown";
}

ValuationMethod parse_method(std::string_view s) {
  if (s == "momentum") return ValuationMethod::momentum;
  if (s == "grid") return ValuationMethod::grid;
  if (s == "kernel") return ValuationMethod::kernel;
  throw InvalidArgument("unknown valuation method '" + std::string(s) + "'");
}

std::uint64_t default_work_budget() {
  if (const char* env = std::getenv("PHI4_WORK_BUDGET")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0) return static_cast<std::uint64_t>(v);
  }
  return 1'000'000'000ULL;
}

namespace {

void require_connected(const Multigraph& g) {
  if (g.vertex_count() == 0) throw InvalidArgument("valuation of the empty graph: use the unit");
  if (!is_connected(g)) throw InvalidArgument("valuation requires a connected graph");
}

}  // namespace

int min_grid_size(const Multigraph& g, int N) {
  int dmax = 0;
  for (int d : g.leg_degrees()) dmax = std::max(dmax, d);
  return std::max(4 * N, dmax * N) + 1;
}

ValuationResult pi_momentum(const Multigraph& g, int N, const ValuationOptions& opts) {
  require_connected(g);
  if (N < 0) throw InvalidArgument("negative cutoff");
  if (g.vertex_count() == 1) return {1.0, ValuationMethod::momentum, N, 1};
  const FourierKernel green = detail::green_kernel(N);
  std::vector<detail::LoopEdge> edges;
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, &green});
  const auto r = detail::loop_sum(g.vertex_count(), edges, opts.work_budget, opts.threads);
  return {r.value, ValuationMethod::momentum, N, r.work};
}

ValuationResult pi_grid(const Multigraph& g, int N, const ValuationOptions& opts) {
  require_connected(g);
  if (N < 0) throw InvalidArgument("negative cutoff");
  const int n = g.vertex_count();
  if (n == 1) return {1.0, ValuationMethod::grid, N, 1};
  const int need = min_grid_size(g, N);
  const int M = opts.grid_size > 0 ? opts.grid_size : need;
  if (M < need) {
    throw InvalidArgument("grid size " + std::to_string(M) + " is below the exactness bound " + std::to_string(need));
  }
  const auto um = static_cast<std::size_t>(M);
  const std::size_t cells = um * um * um;
  const double points = std::pow(static_cast<double>(cells), n - 1);
  const double est = points * static_cast<double>(g.edge_count()) + static_cast<double>(cells) * Cutoff::mode_count(N);
  if (est > static_cast<double>(opts.work_budget)) {
    throw BudgetExceeded("grid valuation over budget", static_cast<std::uint64_t>(std::min(est, 1.8e19)));
  }

  // G_N tabulated on the grid by its cosine series.
  std::vector<double> cos_table(um);
  for (std::size_t r = 0; r < um; ++r) cos_table[r] = std::cos(2.0 * std::numbers::pi * static_cast<double>(r) / M);
  const Cutoff cutoff(N);
  std::vector<double> green(cells, 0.0);
  for (std::size_t a = 0; a < um; ++a) {
    for (std::size_t b = 0; b < um; ++b) {
      for (std::size_t c = 0; c < um; ++c) {
        KahanSum s;
        for (const auto& k : cutoff.modes()) {
          const long phase = k[0] * static_cast<long>(a) + k[1] * static_cast<long>(b) + k[2] * static_cast<long>(c);
          s.add(cos_table[static_cast<std::size_t>(((phase % M) + M) % M)] * propagator(k));
        }
        green[(a * um + b) * um + c] = s.value();
      }
    }
  }

  // Edges grouped by their later endpoint.
  std::vector<std::vector<int>> back(static_cast<std::size_t>(n));
  for (const auto& e : g.edges()) back[static_cast<std::size_t>(e.v)].push_back(e.u);

  std::vector<std::array<int, 3>> pos(static_cast<std::size_t>(n), {0, 0, 0});
  auto diff_index = [&](const std::array<int, 3>& x, const std::array<int, 3>& y) {
    std::size_t idx = 0;
    for (int d = 0; d < 3; ++d) idx = idx * um + static_cast<std::size_t>((x[static_cast<std::size_t>(d)] - y[static_cast<std::size_t>(d)] + M) % M);
    return idx;
  };

  std::uint64_t work = cells * Cutoff::mode_count(N);
  std::vector<double> partial(cells, 0.0);
  auto rec = [&](auto&& self, int v, double prod, KahanSum& acc) -> void {
    if (v == n) {
      acc.add(prod);
      return;
    }
    for (std::size_t cell = 0; cell < cells; ++cell) {
      pos[static_cast<std::size_t>(v)] = {static_cast<int>(cell / (um * um)), static_cast<int>((cell / um) % um),
                                          static_cast<int>(cell % um)};
      double p = prod;
      for (int u : back[static_cast<std::size_t>(v)]) p *= green[diff_index(pos[static_cast<std::size_t>(v)], pos[static_cast<std::size_t>(u)])];
      work += back[static_cast<std::size_t>(v)].size();
      self(self, v + 1, p, acc);
    }
  };
  // Vertex 0 sits at the origin; vertex 1 indexes the deterministic partial sums.
  for (std::size_t cell = 0; cell < cells; ++cell) {
    pos[1] = {static_cast<int>(cell / (um * um)), static_cast<int>((cell / um) % um), static_cast<int>(cell % um)};
    double p = 1.0;
    for (int u : back[1]) p *= green[diff_index(pos[1], pos[static_cast<std::size_t>(u)])];
    KahanSum acc;
    rec(rec, 2, p, acc);
    partial[cell] = acc.value();
  }
  const double value = detail::pairwise_sum(partial) / points;
  return {value, ValuationMethod::grid, N, std::max<std::uint64_t>(work, 1)};
}

ValuationResult pi_kernel(const Multigraph& g, int N, const ValuationOptions& opts) {
  require_connected(g);
  if (N < 0) throw InvalidArgument("negative cutoff");
  if (g.vertex_count() == 1) return {1.0, ValuationMethod::kernel, N, 1};

  using KernelPtr = std::shared_ptr<const FourierKernel>;
  const auto green = std::make_shared<const FourierKernel>(detail::green_kernel(N));
  std::uint64_t work = Cutoff::mode_count(N);

  // Parallel kernels between each vertex pair, multiplied lazily.
  std::map<std::pair<int, int>, std::vector<KernelPtr>> pairs;
  for (const auto& e : g.edges()) pairs[{e.u, e.v}].push_back(green);
  std::vector<char> alive(static_cast<std::size_t>(g.vertex_count()), 1);
  int alive_count = g.vertex_count();
  double factor = 1.0;

  auto merged = [&](std::vector<KernelPtr>& list) -> KernelPtr {
    if (list.size() > 1) {
      std::vector<const FourierKernel*> raw;
      for (const auto& k : list) raw.push_back(k.get());
      auto m = std::make_shared<const FourierKernel>(detail::position_product(raw, work));
      list.assign(1, m);
    }
    return list.front();
  };
  auto neighbours = [&](int w) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [key, list] : pairs) {
      if (key.first == w || key.second == w) out.push_back(key);
    }
    return out;
  };
  auto key_of = [](int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };

  while (alive_count > 2) {
    bool reduced = false;
    for (int w = 0; w < g.vertex_count() && !reduced; ++w) {
      if (!alive[static_cast<std::size_t>(w)]) continue;
      const auto nb = neighbours(w);
      if (nb.size() == 1) {
        // A pendant vertex integrates to the zero mode of its kernel.
        factor *= merged(pairs[nb[0]])->at({0, 0, 0});
        pairs.erase(nb[0]);
      } else if (nb.size() == 2) {
        const int u = nb[0].first == w ? nb[0].second : nb[0].first;
        const int v = nb[1].first == w ? nb[1].second : nb[1].first;
        auto a = merged(pairs[nb[0]]);
        auto b = merged(pairs[nb[1]]);
        work += Cutoff::mode_count(std::min(a->radius(), b->radius()));
        auto series = std::make_shared<const FourierKernel>(detail::mode_product(*a, *b));
        pairs.erase(nb[0]);
        pairs.erase(nb[1]);
        pairs[key_of(u, v)].push_back(series);
      } else {
        continue;
      }
      alive[static_cast<std::size_t>(w)] = 0;
      --alive_count;
      reduced = true;
    }
    if (!reduced) break;
  }

  double value = factor;
  if (alive_count == 2) {
    std::vector<const FourierKernel*> raw;
    for (const auto& [key, list] : pairs) {
      for (const auto& k : list) raw.push_back(k.get());
    }
    value *= detail::integral_of_product(raw, work);
  } else if (alive_count > 2) {
    std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (alive[static_cast<std::size_t>(v)]) label[static_cast<std::size_t>(v)] = next++;
    }
    std::vector<KernelPtr> keep;
    std::vector<detail::LoopEdge> edges;
    for (auto& [key, list] : pairs) {
      keep.push_back(merged(list));
      edges.push_back({label[static_cast<std::size_t>(key.first)], label[static_cast<std::size_t>(key.second)], keep.back().get()});
    }
    const auto r = detail::loop_sum(next, edges, opts.work_budget, opts.threads);
    value *= r.value;
    work += r.work;
  }
  return {value, ValuationMethod::kernel, N, std::max<std::uint64_t>(work, 1)};
}

ValuationResult pi(const Multigraph& g, int N, ValuationMethod method, const ValuationOptions& opts) {
  switch (method) {
    case ValuationMethod::momentum: return pi_momentum(g, N, opts);
    case ValuationMethod::grid: return pi_grid(g, N, opts);
    case ValuationMethod::kernel: return pi_kernel(g, N, opts);
  }
  throw InvalidArgument("unknown valuation method");
}

Counterterms counterterms(int N, ValuationMethod method, const ValuationOptions& opts) {
  Counterterms c;
  c.N = N;
  KahanSum s;
  for (const Cutoff ball(N); const auto& k : ball.modes()) s.add(propagator(k));
  c.c1 = s.value();
  c.c2 = 6.0 * pi(diagrams::bubble(), N, method, opts).value;
  c.c3 = 0.75 * pi(diagrams::banana(4), N, method, opts).value;
  c.c4 = 4.5 * pi(diagrams::double_triangle(), N, method, opts).value;
  return c;
}

}  // namespace phi4
