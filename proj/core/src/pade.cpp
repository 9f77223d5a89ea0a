#include <Eigen/Dense>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <limits>
#include <numeric>

#include "phi4/borel.hpp"
#include "phi4/error.hpp"

namespace phi4 {

namespace {

using boost::multiprecision::abs;

// Solves A x = rhs in place by Gaussian elimination with total pivoting.
std::vector<HighFloat> solve_total_pivot(std::vector<std::vector<HighFloat>> A, std::vector<HighFloat> rhs) {
  const std::size_t n = rhs.size();
  std::vector<std::size_t> col(n);
  std::iota(col.begin(), col.end(), 0);
  HighFloat scale = 0;
  for (const auto& row : A) {
    for (const auto& v : row) scale = abs(v) > scale ? abs(v) : scale;
  }
  const HighFloat tiny = scale * HighFloat("1e-45");
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k;
    std::size_t pc = k;
    HighFloat best = -1;
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        if (abs(A[i][j]) > best) {
          best = abs(A[i][j]);
          pr = i;
          pc = j;
        }
      }
    }
    if (best <= tiny) throw PrecisionError("singular Hankel system");
    std::swap(A[k], A[pr]);
    std::swap(rhs[k], rhs[pr]);
    if (pc != k) {
      for (auto& row : A) std::swap(row[k], row[pc]);
      std::swap(col[k], col[pc]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const HighFloat f = A[i][k] / A[k][k];
      if (f == 0) continue;
      for (std::size_t j = k; j < n; ++j) A[i][j] -= f * A[k][j];
      rhs[i] -= f * rhs[k];
    }
  }
  std::vector<HighFloat> y(n);
  for (std::size_t k = n; k-- > 0;) {
    HighFloat s = rhs[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= A[k][j] * y[j];
    y[k] = s / A[k][k];
  }
  std::vector<HighFloat> x(n);
  for (std::size_t k = 0; k < n; ++k) x[col[k]] = y[k];
  return x;
}

long double horner(const std::vector<HighFloat>& c, long double t) {
  long double v = 0.0L;
  for (std::size_t k = c.size(); k-- > 0;) v = v * t + static_cast<long double>(c[k]);
  return v;
}

std::vector<std::pair<int, int>> candidate_degrees(int order) {
  const int lo = (order - 1) / 2;
  const int hi = order - 1 - lo;
  std::vector<std::pair<int, int>> out{{lo, hi}};
  if (hi != lo) out.emplace_back(hi, lo);
  if (lo >= 1) out.emplace_back(lo - 1, hi + 1);
  return out;
}

}  // namespace

double PadeApproximant::operator()(double t) const {
  const long double lt = t;
  return static_cast<double>(horner(p, lt) / horner(q, lt));
}

std::vector<std::complex<double>> PadeApproximant::poles() const {
  std::vector<double> c;
  for (const auto& v : q) c.push_back(static_cast<double>(v));
  // Trailing coefficients that vanish lower the degree.
  while (c.size() > 1 && std::abs(c.back()) <= 1e-300) c.pop_back();
  const auto m = static_cast<Eigen::Index>(c.size()) - 1;
  if (m <= 0) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < m; ++i) companion(i, m - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < m; ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

PadeApproximant pade(const std::vector<HighFloat>& c, int L, int M) {
  if (L < 0 || M < 0) throw InvalidArgument("negative Pade degree");
  if (static_cast<int>(c.size()) < L + M + 1) throw InvalidArgument("not enough coefficients for the Pade degrees");
  auto coef = [&](int i) { return i < 0 ? HighFloat(0) : c[static_cast<std::size_t>(i)]; };
  PadeApproximant r;
  r.q.assign(static_cast<std::size_t>(M) + 1, HighFloat(0));
  r.q[0] = 1;
  if (M > 0) {
    std::vector<std::vector<HighFloat>> A(static_cast<std::size_t>(M), std::vector<HighFloat>(static_cast<std::size_t>(M)));
    std::vector<HighFloat> rhs(static_cast<std::size_t>(M));
    for (int row = 0; row < M; ++row) {
      const int k = L + 1 + row;
      for (int j = 1; j <= M; ++j) A[static_cast<std::size_t>(row)][static_cast<std::size_t>(j - 1)] = coef(k - j);
      rhs[static_cast<std::size_t>(row)] = -coef(k);
    }
    const auto x = solve_total_pivot(std::move(A), std::move(rhs));
    for (int j = 1; j <= M; ++j) r.q[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j - 1)];
  }
  for (int k = 0; k <= L; ++k) {
    HighFloat s = 0;
    for (int j = 0; j <= std::min(k, M); ++j) s += r.q[static_cast<std::size_t>(j)] * coef(k - j);
    r.p.push_back(s);
  }
  return r;
}

bool has_positive_pole(const PadeApproximant& r) {
  for (const auto& z : r.poles()) {
    if (z.real() >= 0.0 && std::abs(z.imag()) <= 1e-6 * (1.0 + std::abs(z))) return true;
  }
  return false;
}

PadeBorelResult pade_borel_detail(double eps, int order, std::optional<std::pair<int, int>> degrees) {
  if (!(eps > 0.0 && eps <= 0.5)) throw InvalidArgument("eps must lie in (0, 0.5]");
  if (order < 8) throw InvalidArgument("pade_borel needs order >= 8");
  if (degrees && degrees->first + degrees->second + 1 > order) {
    throw InvalidArgument("Pade degrees need more coefficients than the order provides");
  }
  const auto b = borel_coeffs(order);
  const auto candidates = degrees ? std::vector<std::pair<int, int>>{*degrees} : candidate_degrees(order);
  for (const auto& [L, M] : candidates) {
    const PadeApproximant r = pade(b.b, L, M);
    if (has_positive_pole(r)) continue;
    boost::math::quadrature::exp_sinh<double> integrator;
    double error = 0.0;
    const double v = integrator.integrate([&](double s) { return std::exp(-s) * r(eps * s); }, 0.0,
                                          std::numeric_limits<double>::infinity(), 1e-14, &error);
    if (!std::isfinite(v) || error > 1e-10 * std::max(1.0, std::abs(v))) {
      throw QuadratureError("Laplace integral of the Pade approximant did not converge");
    }
    return {v, L, M, r.poles()};
  }
  throw SpuriousPole("every candidate approximant has a pole on [0, inf)");
}

double pade_borel(double eps, int order, std::optional<std::pair<int, int>> degrees) {
  return pade_borel_detail(eps, order, degrees).value;
}

}  // namespace phi4
