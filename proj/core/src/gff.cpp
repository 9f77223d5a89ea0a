#include "phi4/gff.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <thread>

#include "kernel.hpp"
#include "phi4/cutoff.hpp"
#include "phi4/error.hpp"

namespace phi4 {

namespace {

struct Plan {
  Plan(int M, fftw_complex* in, double* out) {
    std::lock_guard lock(detail::fftw_planner_mutex());
    p = fftw_plan_dft_c2r_3d(M, M, M, in, out, FFTW_ESTIMATE);
  }
  ~Plan() {
    std::lock_guard lock(detail::fftw_planner_mutex());
    fftw_destroy_plan(p);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  fftw_plan p;
};

// Modes with k > -k lexicographically; their partners are conjugates.
std::vector<Mode> half_modes(const Cutoff& cutoff) {
  std::vector<Mode> out;
  for (const auto& k : cutoff.modes()) {
    if (k > Mode{0, 0, 0}) out.push_back(k);
  }
  return out;
}

class Sampler {
 public:
  Sampler(int N, int M) : M_(M), um_(static_cast<std::size_t>(M)), half_(um_ / 2 + 1) {
    const Cutoff cutoff(N);
    modes_ = half_modes(cutoff);
    for (const auto& k : modes_) sigma_.push_back(std::sqrt(propagator(k)));
    detail::KahanSum c;
    for (const auto& k : cutoff.modes()) c.add(propagator(k));
    C_ = c.value();
    spec_ = fftw_alloc_complex(um_ * um_ * half_);
    field_ = fftw_alloc_real(um_ * um_ * um_);
    if (!spec_ || !field_) throw std::bad_alloc();
    plan_.emplace(M, spec_, field_);
  }
  ~Sampler() {
    plan_.reset();
    fftw_free(spec_);
    fftw_free(field_);
  }
  Sampler(const Sampler&) = delete;
  Sampler& operator=(const Sampler&) = delete;

  XYSample draw(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;

    std::fill_n(&spec_[0][0], 2 * um_ * um_ * half_, 0.0);
    set({0, 0, 0}, normal(rng), 0.0);
    for (std::size_t i = 0; i < modes_.size(); ++i) {
      const double a = normal(rng);
      const double b = normal(rng);
      const double s = sigma_[i] / std::numbers::sqrt2;
      const Mode& k = modes_[i];
      set(k, s * a, s * b);
      set({-k[0], -k[1], -k[2]}, s * a, -s * b);
    }
    fftw_execute(plan_->p);

    detail::KahanSum x;
    detail::KahanSum y;
    const std::size_t total = um_ * um_ * um_;
    for (std::size_t i = 0; i < total; ++i) {
      const double f2 = field_[i] * field_[i];
      x.add(f2 * f2 - 6.0 * C_ * f2 + 3.0 * C_ * C_);
      y.add(f2 - C_);
    }
    return {x.value() / static_cast<double>(total), y.value() / static_cast<double>(total)};
  }

 private:
  // Only the half-spectrum c >= 0 is stored; c < 0 is implied by symmetry.
  void set(const Mode& k, double re, double im) {
    if (k[2] < 0) return;
    const std::size_t idx = (wrap(k[0]) * um_ + wrap(k[1])) * half_ + static_cast<std::size_t>(k[2]);
    spec_[idx][0] = re;
    spec_[idx][1] = im;
  }
  std::size_t wrap(int k) const { return static_cast<std::size_t>(((k % M_) + M_) % M_); }

  int M_;
  std::size_t um_;
  std::size_t half_;
  std::vector<Mode> modes_;
  std::vector<double> sigma_;
  double C_ = 0.0;
  fftw_complex* spec_ = nullptr;
  double* field_ = nullptr;
  std::optional<Plan> plan_;
};

}  // namespace

std::vector<XYSample> gff_samples(const GffSampleConfig& cfg) {
  if (cfg.N < 0) throw InvalidArgument("negative cutoff");
  const int M = cfg.grid_size > 0 ? cfg.grid_size : 4 * cfg.N + 1;
  if (M < 4 * cfg.N + 1) throw InvalidArgument("grid size below 4N + 1");
  std::vector<XYSample> out(cfg.samples);
  const auto threads = static_cast<std::uint64_t>(std::max(1, cfg.threads));
  auto run = [&](std::uint64_t lo, std::uint64_t hi) {
    Sampler s(cfg.N, M);
    for (std::uint64_t i = lo; i < hi; ++i) out[i] = s.draw(cfg.seed, i);
  };
  if (threads == 1 || cfg.samples < threads) {
    run(0, cfg.samples);
    return out;
  }
  std::vector<std::jthread> pool;
  const std::uint64_t chunk = (cfg.samples + threads - 1) / threads;
  for (std::uint64_t t = 0; t < threads; ++t) {
    const std::uint64_t lo = t * chunk;
    const std::uint64_t hi = std::min(cfg.samples, lo + chunk);
    if (lo < hi) pool.emplace_back(run, lo, hi);
  }
  pool.clear();
  return out;
}

std::vector<MomentEstimate> moments_from_samples(const std::vector<XYSample>& samples,
                                                 const std::vector<std::pair<int, int>>& targets) {
  if (samples.size() < 2) throw InvalidArgument("need at least two samples");
  const double n = static_cast<double>(samples.size());
  std::vector<MomentEstimate> out;
  std::vector<double> values(samples.size());
  for (const auto& [a, b] : targets) {
    if (a < 0 || b < 0) throw InvalidArgument("negative moment exponent");
    for (std::size_t i = 0; i < samples.size(); ++i) {
      values[i] = std::pow(samples[i].x, a) * std::pow(samples[i].y, b);
    }
    const double mean = detail::pairwise_sum(values) / n;
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) sq[i] = (values[i] - mean) * (values[i] - mean);
    const double var = detail::pairwise_sum(sq) / (n - 1.0);
    out.push_back({a, b, mean, std::sqrt(var / n)});
  }
  return out;
}

std::vector<MomentEstimate> gff_moments(const GffSampleConfig& cfg, const std::vector<std::pair<int, int>>& targets) {
  return moments_from_samples(gff_samples(cfg), targets);
}

}  // namespace phi4
