#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

#include "phi4/cutoff.hpp"

namespace phi4::detail {

// A real, even function on the torus given by its Fourier coefficients, which
// vanish outside the l1 ball of the given radius. Stored densely on the cube
// [-R, R]^3.
class FourierKernel {
 public:
  FourierKernel() = default;
  explicit FourierKernel(int radius);

  int radius() const noexcept { return radius_; }
  double at(const Mode& k) const noexcept { return c_[index(k)]; }
  double& at(const Mode& k) noexcept { return c_[index(k)]; }
  // Zero outside the support ball.
  double value(const Mode& k) const noexcept { return l1_norm(k) <= radius_ ? at(k) : 0.0; }

 private:
  std::size_t index(const Mode& k) const noexcept {
    const auto side = static_cast<std::size_t>(2 * radius_ + 1);
    return (static_cast<std::size_t>(k[0] + radius_) * side + static_cast<std::size_t>(k[1] + radius_)) * side +
           static_cast<std::size_t>(k[2] + radius_);
  }

  int radius_ = 0;
  std::vector<double> c_{0.0};
};

// FFTW planning is not thread-safe; every plan creation and destruction holds this.
std::mutex& fftw_planner_mutex();

// Fourier coefficients of G_N: the propagator on K_N.
FourierKernel green_kernel(int N);

// Smallest size >= n whose prime factors are all in {2, 3, 5, 7}.
int fft_size(int n);

// Samples f(j/M), j in {0..M-1}^3, row-major, computed by an inverse FFT.
// Requires M >= 2R+1.
std::vector<double> position_samples(const FourierKernel& f, int M);

// Fourier coefficients of the pointwise product of the given functions
// (a convolution of coefficient arrays); the radius is the sum of radii.
// `work` is increased by the number of grid points touched.
FourierKernel position_product(const std::vector<const FourierKernel*>& factors, std::uint64_t& work);

// Coefficients multiplied mode by mode; the radius is the smaller one.
FourierKernel mode_product(const FourierKernel& a, const FourierKernel& b);

// Integral over the torus of the product of the given functions, using exact
// grid quadrature with M > sum of radii.
double integral_of_product(const std::vector<const FourierKernel*>& factors, std::uint64_t& work);

// Compensated summation.
class KahanSum {
 public:
  void add(double x) noexcept {
    const double y = x - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const noexcept { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// Sum of a vector by recursive halving; the tree only depends on the length.
double pairwise_sum(const std::vector<double>& v);

}  // namespace phi4::detail
