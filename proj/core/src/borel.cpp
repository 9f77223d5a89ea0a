#include "phi4/borel.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "phi4/error.hpp"
#include "phi4/rational.hpp"
#include "phi4/scans.hpp"

namespace phi4 {

namespace {

constexpr int kMaxAsymptoticOrder = 60;

void check_eps(double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw InvalidArgument("eps must be finite and non-negative");
}

void check_order(int order) {
  if (order < 1 || order > kMaxAsymptoticOrder) {
    throw InvalidArgument("asymptotic order must lie in 1.." + std::to_string(kMaxAsymptoticOrder));
  }
}

HighFloat to_high(const Integer& z) { return HighFloat(z.get_str()); }

HighFloat relative_difference(const HighFloat& x, const HighFloat& y) {
  using boost::multiprecision::abs;
  const HighFloat scale = abs(x) > abs(y) ? abs(x) : abs(y);
  return scale == 0 ? HighFloat(0) : HighFloat(abs(x - y) / scale);
}

}  // namespace

double z_quadrature(double eps, double tolerance) {
  check_eps(eps);
  boost::math::quadrature::exp_sinh<double> integrator;
  const double c = 2.0 * std::numbers::sqrt2;
  auto f = [eps, c](double u) {
    const double u2 = u * u;
    return c * std::exp(-u2 - eps * u2 * u2);
  };
  double error = 0.0;
  const double v = integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-15, &error);
  if (!std::isfinite(v) || error > tolerance) throw QuadratureError("z_quadrature did not converge");
  return v;
}

double z_quadrature_phi(double eps, double tolerance) {
  check_eps(eps);
  auto f = [eps](double phi) {
    const double p2 = phi * phi;
    return std::exp(-0.5 * p2 - 0.25 * eps * p2 * p2);
  };
  double error = 0.0;
  const double half = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, 0.0, std::numeric_limits<double>::infinity(), 10, 1e-13, &error);
  if (!std::isfinite(half) || 2.0 * error > tolerance) throw QuadratureError("z_quadrature_phi did not converge");
  return 2.0 * half;
}

AsymptoticSeries asymptotic_coeffs_gamma(int order) {
  check_order(order);
  AsymptoticSeries s;
  const HighFloat sqrt2 = boost::multiprecision::sqrt(HighFloat(2));
  for (int n = 0; n < order; ++n) {
    HighFloat v = sqrt2 * boost::math::tgamma(HighFloat(2 * n) + HighFloat(1) / 2) / to_high(factorial(static_cast<unsigned>(n)));
    if (n % 2 == 1) v = -v;
    s.a.push_back(v);
  }
  return s;
}

AsymptoticSeries asymptotic_coeffs_moments(int order) {
  check_order(order);
  AsymptoticSeries s;
  const HighFloat root = boost::multiprecision::sqrt(2 * boost::math::constants::pi<HighFloat>());
  for (int n = 0; n < order; ++n) {
    const auto un = static_cast<unsigned>(n);
    const Integer den = factorial(un) * (Integer(1) << (2 * un));
    HighFloat v = root * to_high(double_factorial_odd(2 * un)) / to_high(den);
    if (n % 2 == 1) v = -v;
    s.a.push_back(v);
  }
  return s;
}

AsymptoticSeries asymptotic_coeffs(int order) {
  auto g = asymptotic_coeffs_gamma(order);
  const auto m = asymptotic_coeffs_moments(order);
  for (int n = 0; n < order; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (relative_difference(g.a[i], m.a[i]) > HighFloat("1e-12")) {
      throw PrecisionError("asymptotic coefficient routes disagree at n = " + std::to_string(n));
    }
  }
  return g;
}

BorelSeries borel_coeffs(int order) {
  const auto a = asymptotic_coeffs(order);
  const HighFloat sqrt_pi = boost::multiprecision::sqrt(boost::math::constants::pi<HighFloat>());
  BorelSeries s;
  for (int n = 0; n < order; ++n) {
    const auto un = static_cast<unsigned>(n);
    const HighFloat fact = to_high(factorial(un));
    const HighFloat b = a.a[un] / fact;
    HighFloat closed = boost::math::tgamma(HighFloat(n) + HighFloat(1) / 4) *
                       boost::math::tgamma(HighFloat(n) + HighFloat(3) / 4) / (sqrt_pi * fact * fact);
    closed *= boost::multiprecision::pow(HighFloat(4), n);
    if (n % 2 == 1) closed = -closed;
    if (relative_difference(b, closed) > HighFloat("1e-12")) {
      throw PrecisionError("Borel coefficient closed form disagrees at n = " + std::to_string(n));
    }
    s.b.push_back(b);
  }
  return s;
}

double borel_ratio(int n) {
  if (n < 0) throw InvalidArgument("negative index");
  const double x = n;
  return -4.0 * (x + 0.25) * (x + 0.75) / ((x + 1.0) * (x + 1.0));
}

SokalReport sokal_scan(int n_max, const std::vector<double>& eps_grid) {
  if (n_max < 1 || n_max > 25) throw InvalidArgument("n_max must lie in 1..25");
  for (double e : eps_grid) {
    if (!(e > 0.0 && e <= 0.5)) throw InvalidArgument("eps must lie in (0, 0.5]");
  }
  const auto a = asymptotic_coeffs(n_max + 1);
  const HighFloat root = boost::multiprecision::sqrt(2 * boost::math::constants::pi<HighFloat>());
  SokalReport report;
  std::vector<double> xs;
  std::vector<double> ys;
  for (double eps : eps_grid) {
    const HighFloat z = z_quadrature(eps);
    const HighFloat he = eps;
    HighFloat partial = 0;
    HighFloat power = 1;
    for (int n = 1; n <= n_max; ++n) {
      partial += a.a[static_cast<std::size_t>(n - 1)] * power;
      power *= he;
      const auto un = static_cast<unsigned>(n);
      SokalCell cell;
      cell.n = n;
      cell.eps = eps;
      cell.remainder = static_cast<double>(z - partial);
      cell.bound = static_cast<double>(power * root * to_high(double_factorial_odd(2 * un)) /
                                       (to_high(factorial(un)) * boost::multiprecision::pow(HighFloat(4), n)));
      const double ps = std::abs(static_cast<double>(partial));
      const double ulp = std::nextafter(ps, std::numeric_limits<double>::infinity()) - ps;
      cell.below_noise = std::abs(cell.remainder) <= 1e3 * ulp;
      cell.passes = cell.below_noise || std::abs(cell.remainder) <= cell.bound;
      if (!cell.below_noise) {
        xs.push_back(n);
        ys.push_back(std::log(std::abs(cell.remainder)) -
                     static_cast<double>(boost::multiprecision::log(to_high(factorial(un)) * power)));
      }
      report.cells.push_back(cell);
    }
  }
  report.pass = !xs.empty();
  for (const auto& c : report.cells) report.pass = report.pass && c.passes;
  if (xs.size() >= 2) {
    const LinearFit f = fit_linear(xs, ys);
    report.r = std::exp(f.slope);
    report.C = std::exp(f.intercept);
  }
  return report;
}

}  // namespace phi4
