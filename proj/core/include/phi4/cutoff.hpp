#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace phi4 {

using Mode = std::array<int, 3>;

inline int l1_norm(const Mode& k) noexcept {
  return (k[0] < 0 ? -k[0] : k[0]) + (k[1] < 0 ? -k[1] : k[1]) + (k[2] < 0 ? -k[2] : k[2]);
}
inline int norm2(const Mode& k) noexcept { return k[0] * k[0] + k[1] * k[1] + k[2] * k[2]; }

// Spectral truncation of the free field on the unit torus: the modes k in Z^3
// with |k1| + |k2| + |k3| <= N, in lexicographic order.
class Cutoff {
 public:
  explicit Cutoff(int N);

  int N() const noexcept { return n_; }
  const std::vector<Mode>& modes() const noexcept { return modes_; }
  std::size_t size() const noexcept { return modes_.size(); }

  // (2N+1)(2N^2+2N+3)/3
  static std::size_t mode_count(int N);

 private:
  int n_;
  std::vector<Mode> modes_;
};

// Laplacian eigenvalue (2 pi)^2 |k|^2 and the massive propagator 1/(lambda+1).
double lambda(const Mode& k);
double propagator(const Mode& k);

// Truncated Green function G_N(x) = sum_{k in K_N} cos(2 pi k.x) / (lambda_k + 1).
double green_value(const Cutoff& cutoff, const std::array<double, 3>& x);

}  // namespace phi4
