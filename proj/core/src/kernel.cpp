#include "kernel.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>

#include "phi4/error.hpp"

namespace phi4::detail {

namespace {

struct FftwBuffer {
  explicit FftwBuffer(std::size_t n) : p(fftw_alloc_complex(n)) {
    if (!p) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(p); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  fftw_complex* p;
};

struct RealBuffer {
  explicit RealBuffer(std::size_t n) : p(fftw_alloc_real(n)) {
    if (!p) throw std::bad_alloc();
  }
  ~RealBuffer() { fftw_free(p); }
  RealBuffer(const RealBuffer&) = delete;
  RealBuffer& operator=(const RealBuffer&) = delete;
  double* p;
};

void execute_c2r(int M, fftw_complex* in, double* out) {
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    plan = fftw_plan_dft_c2r_3d(M, M, M, in, out, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard lock(fftw_planner_mutex());
  fftw_destroy_plan(plan);
}

void execute_r2c(int M, double* in, fftw_complex* out) {
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    plan = fftw_plan_dft_r2c_3d(M, M, M, in, out, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard lock(fftw_planner_mutex());
  fftw_destroy_plan(plan);
}

std::size_t wrap(int k, int M) { return static_cast<std::size_t>(((k % M) + M) % M); }

}  // namespace

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

FourierKernel::FourierKernel(int radius)
    : radius_(radius), c_(static_cast<std::size_t>(2 * radius + 1) * (2 * radius + 1) * (2 * radius + 1), 0.0) {
  if (radius < 0) throw InvalidArgument("negative kernel radius");
}

FourierKernel green_kernel(int N) {
  FourierKernel g(N);
  for (const Cutoff ball(N); const auto& k : ball.modes()) g.at(k) = propagator(k);
  return g;
}

int fft_size(int n) {
  for (int m = std::max(n, 1);; ++m) {
    int r = m;
    for (int p : {2, 3, 5, 7}) {
      while (r % p == 0) r /= p;
    }
    if (r == 1) return m;
  }
}

std::vector<double> position_samples(const FourierKernel& f, int M) {
  const int R = f.radius();
  if (M < 2 * R + 1) throw InvalidArgument("grid too small for kernel");
  const auto um = static_cast<std::size_t>(M);
  const std::size_t half = um / 2 + 1;
  FftwBuffer spec(um * um * half);
  std::fill_n(&spec.p[0][0], 2 * um * um * half, 0.0);
  for (int a = -R; a <= R; ++a) {
    for (int b = -R; b <= R; ++b) {
      const int rest = R - std::abs(a) - std::abs(b);
      if (rest < 0) continue;
      for (int c = 0; c <= rest; ++c) {
        const std::size_t idx = (wrap(a, M) * um + wrap(b, M)) * half + static_cast<std::size_t>(c);
        spec.p[idx][0] = f.at({a, b, c});
      }
    }
  }
  RealBuffer out(um * um * um);
  execute_c2r(M, spec.p, out.p);
  return std::vector<double>(out.p, out.p + um * um * um);
}

FourierKernel position_product(const std::vector<const FourierKernel*>& factors, std::uint64_t& work) {
  int R = 0;
  for (const auto* f : factors) R += f->radius();
  const int M = fft_size(2 * R + 1);
  const auto um = static_cast<std::size_t>(M);
  const std::size_t total = um * um * um;
  RealBuffer prod(total);
  std::fill_n(prod.p, total, 1.0);
  for (const auto* f : factors) {
    const auto s = position_samples(*f, M);
    for (std::size_t i = 0; i < total; ++i) prod.p[i] *= s[i];
    work += total;
  }
  const std::size_t half = um / 2 + 1;
  FftwBuffer spec(um * um * half);
  execute_r2c(M, prod.p, spec.p);
  const double scale = 1.0 / static_cast<double>(total);
  FourierKernel out(R);
  for (int a = -R; a <= R; ++a) {
    for (int b = -R; b <= R; ++b) {
      const int rest = R - std::abs(a) - std::abs(b);
      if (rest < 0) continue;
      for (int c = 0; c <= rest; ++c) {
        const double v = spec.p[(wrap(a, M) * um + wrap(b, M)) * half + static_cast<std::size_t>(c)][0] * scale;
        out.at({a, b, c}) = v;
        out.at({-a, -b, -c}) = v;
      }
    }
  }
  return out;
}

FourierKernel mode_product(const FourierKernel& a, const FourierKernel& b) {
  const int R = std::min(a.radius(), b.radius());
  FourierKernel out(R);
  for (const Cutoff ball(R); const auto& k : ball.modes()) out.at(k) = a.at(k) * b.at(k);
  return out;
}

double integral_of_product(const std::vector<const FourierKernel*>& factors, std::uint64_t& work) {
  if (factors.empty()) return 1.0;
  if (factors.size() == 1) return factors[0]->at({0, 0, 0});
  if (factors.size() == 2) {
    // Parseval: sum_k a(k) b(-k), and both are even.
    const auto& a = *factors[0];
    const auto& b = *factors[1];
    KahanSum s;
    for (const Cutoff ball(std::min(a.radius(), b.radius())); const auto& k : ball.modes()) s.add(a.at(k) * b.at(k));
    work += Cutoff::mode_count(std::min(a.radius(), b.radius()));
    return s.value();
  }
  int R = 0;
  int largest = 0;
  for (const auto* f : factors) {
    R += f->radius();
    largest = std::max(largest, f->radius());
  }
  const int M = fft_size(std::max(R + 1, 2 * largest + 1));
  const auto um = static_cast<std::size_t>(M);
  const std::size_t total = um * um * um;
  std::vector<double> prod(total, 1.0);
  for (const auto* f : factors) {
    const auto s = position_samples(*f, M);
    for (std::size_t i = 0; i < total; ++i) prod[i] *= s[i];
    work += total;
  }
  KahanSum sum;
  for (double v : prod) sum.add(v);
  return sum.value() / static_cast<double>(total);
}

double pairwise_sum(const std::vector<double>& v) {
  auto rec = [&](auto&& self, std::size_t lo, std::size_t hi) -> double {
    if (hi - lo <= 8) {
      double s = 0.0;
      for (std::size_t i = lo; i < hi; ++i) s += v[i];
      return s;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return self(self, lo, mid) + self(self, mid, hi);
  };
  return rec(rec, 0, v.size());
}

}  // namespace phi4::detail
