#include "phi4/cutoff.hpp"

#include <cmath>
#include <numbers>

#include "phi4/error.hpp"

namespace phi4 {

Cutoff::Cutoff(int N) : n_(N) {
  if (N < 0) throw InvalidArgument("cutoff must be non-negative");
  modes_.reserve(mode_count(N));
  for (int a = -N; a <= N; ++a) {
    for (int b = -N; b <= N; ++b) {
      for (int c = -N; c <= N; ++c) {
        if (std::abs(a) + std::abs(b) + std::abs(c) <= N) modes_.push_back({a, b, c});
      }
    }
  }
}

std::size_t Cutoff::mode_count(int N) {
  const auto n = static_cast<std::size_t>(N);
  return (2 * n + 1) * (2 * n * n + 2 * n + 3) / 3;
}

double lambda(const Mode& k) {
  constexpr double four_pi2 = 4.0 * std::numbers::pi * std::numbers::pi;
  return four_pi2 * norm2(k);
}

double propagator(const Mode& k) { return 1.0 / (lambda(k) + 1.0); }

double green_value(const Cutoff& cutoff, const std::array<double, 3>& x) {
  double sum = 0.0;
  for (const auto& k : cutoff.modes()) {
    const double phase = 2.0 * std::numbers::pi * (k[0] * x[0] + k[1] * x[1] + k[2] * x[2]);
    sum += std::cos(phase) * propagator(k);
  }
  return sum;
}

}  // namespace phi4
