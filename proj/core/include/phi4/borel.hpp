#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace phi4 {

using HighFloat = boost::multiprecision::cpp_dec_float_50;

// Z(eps) = sqrt(2) int_0^inf exp(-t - eps t^2) / sqrt(t) dt, by tanh-sinh
// quadrature after t = u^2. Throws QuadratureError above `tolerance`.
double z_quadrature(double eps, double tolerance = 1e-12);
// The same value as int_R exp(-phi^2/2 - eps phi^4/4) d phi, by adaptive
// Gauss-Kronrod.
double z_quadrature_phi(double eps, double tolerance = 1e-12);

// Asymptotic coefficients of Z at eps = 0.
struct AsymptoticSeries {
  std::vector<HighFloat> a;
  int order() const { return static_cast<int>(a.size()); }
};

// a_n = sqrt(2) (-1)^n Gamma(2n + 1/2) / n!.
AsymptoticSeries asymptotic_coeffs_gamma(int order);
// a_n = sqrt(2 pi) (-1/4)^n (4n - 1)!! / n!, from exact integers.
AsymptoticSeries asymptotic_coeffs_moments(int order);
// Both routes, asserted equal to 1e-12 relative (PrecisionError otherwise).
// Pre: order <= 60.
AsymptoticSeries asymptotic_coeffs(int order);

struct BorelSeries {
  std::vector<HighFloat> b;
  int order() const { return static_cast<int>(b.size()); }
};

// b_n = a_n / n!, checked against (-4)^n Gamma(n + 1/4) Gamma(n + 3/4) /
// (sqrt(pi) n!^2).
BorelSeries borel_coeffs(int order);
// Exact ratio b_{n+1} / b_n = -4 (n + 1/4)(n + 3/4) / (n + 1)^2.
double borel_ratio(int n);

// P(t) / Q(t) with Q(0) = 1.
struct PadeApproximant {
  std::vector<HighFloat> p;
  std::vector<HighFloat> q;

  int L() const { return static_cast<int>(p.size()) - 1; }
  int M() const { return static_cast<int>(q.size()) - 1; }
  double operator()(double t) const;
  // Roots of Q.
  std::vector<std::complex<double>> poles() const;
};

// [L/M] approximant from c_0..c_{L+M}; the Hankel system is solved by
// Gaussian elimination with total pivoting. Throws PrecisionError if singular.
PadeApproximant pade(const std::vector<HighFloat>& c, int L, int M);

// Rejects approximants with a pole on [0, inf).
bool has_positive_pole(const PadeApproximant& r);

struct PadeBorelResult {
  double value = 0.0;
  int L = 0;
  int M = 0;
  std::vector<std::complex<double>> poles;
};

// (1/eps) int_0^inf exp(-t/eps) R(t) dt with R the Pade approximant of the
// Borel transform built from b_0..b_{order-1}. Without explicit degrees the
// near-diagonal pairs are tried in turn. Pre: 0 < eps <= 0.5, order >= 8.
PadeBorelResult pade_borel_detail(double eps, int order, std::optional<std::pair<int, int>> degrees = std::nullopt);
double pade_borel(double eps, int order, std::optional<std::pair<int, int>> degrees = std::nullopt);

struct SokalCell {
  int n = 0;
  double eps = 0.0;
  double remainder = 0.0;  // Z(eps) - sum_{k<n} a_k eps^k
  double bound = 0.0;      // (eps/4)^n (4n-1)!! sqrt(2 pi) / n!
  bool below_noise = false;
  bool passes = false;
};

struct SokalReport {
  std::vector<SokalCell> cells;
  double C = 0.0;  // exp(intercept) of log(|R_n| / (n! eps^n)) against n
  double r = 0.0;  // exp(slope)
  bool pass = false;
};

// Pre: 1 <= n_max <= 25, every eps in (0, 0.5].
SokalReport sokal_scan(int n_max, const std::vector<double>& eps_grid);

}  // namespace phi4
