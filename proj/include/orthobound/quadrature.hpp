#pragma once

#include <cstddef>

#include "orthobound/space.hpp"

namespace orthobound {

/// n-point Gauss-Legendre rule on [a, b] with the given constant density.
/// Exact for polynomials of degree <= 2n - 1.
QuadratureGrid gauss_legendre(std::size_t n, double a = -1.0, double b = 1.0, double rho = 1.0);

/// Legendre polynomial P_n(x) and its derivative by the three-term recurrence.
struct LegendreValue {
  double p;
  double dp;
};
LegendreValue legendre(std::size_t n, double x) noexcept;

}  // namespace orthobound
