#pragma once

#include <vector>

namespace stationary {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton on P_n, tolerance near
/// machine precision).
QuadratureRule gauss_legendre(int n);

/// The same rule mapped to [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

}  // namespace stationary
