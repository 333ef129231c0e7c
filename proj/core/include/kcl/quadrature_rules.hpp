#pragma once

#include <vector>

namespace kcl {

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Hermite rule for weight exp(-x^2) on the real line.
Rule1D gauss_hermite(int n);

/// Gauss-Legendre rule on [a, b].
Rule1D gauss_legendre(int n, double a, double b);

}  // namespace kcl
