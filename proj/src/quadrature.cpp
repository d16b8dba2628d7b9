#include "orthobound/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "orthobound/error.hpp"

namespace orthobound {

LegendreValue legendre(std::size_t n, double x) noexcept {
  double p0 = 1.0;
  double p1 = x;
  if (n == 0) return {1.0, 0.0};
  for (std::size_t k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = pk;
  }
  // (1 - x^2) P_n' = n (P_{n-1} - x P_n); nodes never sit at +-1.
  const double dp = n * (p0 - x * p1) / (1.0 - x * x);
  return {p1, dp};
}

QuadratureGrid gauss_legendre(std::size_t n, double a, double b, double rho) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "gauss_legendre: n must be positive");
  if (!(b > a)) throw Error(ErrorKind::InvalidArgument, "gauss_legendre: need a < b");
  std::vector<double> nodes(n), weights(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    // Newton from the Chebyshev-like initial guess, roots in descending order.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    LegendreValue v{};
    for (int iter = 0; iter < 100; ++iter) {
      v = legendre(n, x);
      const double dx = v.p / v.dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    v = legendre(n, x);
    const double w = 2.0 / ((1.0 - x * x) * v.dp * v.dp);
    nodes[i] = mid - half * x;
    nodes[n - 1 - i] = mid + half * x;
    weights[i] = weights[n - 1 - i] = half * w;
  }
  return QuadratureGrid(std::move(nodes), std::move(weights), std::vector<double>(n, rho));
}

}  // namespace orthobound
