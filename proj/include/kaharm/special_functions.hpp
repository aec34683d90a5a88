#pragma once

#include <vector>

namespace kaharm {

/// Gamma function by the Lanczos approximation (g = 7, 9 coefficients) with
/// reflection below 1/2. Throws GammaPole at 0, -1, -2, ...
double gamma_fn(double x);

/// log Gamma(x) for x > 0, same approximation.
double log_gamma(double x);

/// Generalized Laguerre polynomial L_l^{(lambda)}(t) by the three-term recurrence.
/// Throws GammaPole if lambda + j + 1 is a nonpositive integer for some 0 <= j <= l.
double laguerre_poly(double lambda, int l, double t);

/// Same polynomial from the explicit finite sum
///   sum_j (-1)^j / (j! (l-j)!) Gamma(lambda+l+1)/Gamma(lambda+j+1) t^j,
/// with the Gamma ratio taken as the finite product (lambda+j+1)...(lambda+l).
double laguerre_poly_sum(double lambda, int l, double t);

/// Gauss rule for  int_0^inf t^alpha e^{-t} g(t) dt ~ sum_i w_i g(t_i).
struct GaussLaguerreRule {
  double alpha = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;      ///< may underflow to 0 for the largest nodes
  std::vector<double> log_weights;  ///< log w_i, always finite
};

/// Golub-Welsch: nodes are eigenvalues of the symmetric tridiagonal Jacobi
/// matrix (Newton-polished); weights are Christoffel numbers evaluated in log
/// form so they keep full relative accuracy far out in the tail.
GaussLaguerreRule gauss_laguerre(int n, double alpha);

/// Shared, lazily built rule (thread-safe; entries are never mutated once built).
const GaussLaguerreRule& cached_gauss_laguerre(int n, double alpha);

}  // namespace kaharm
