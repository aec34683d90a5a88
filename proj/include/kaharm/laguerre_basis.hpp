#pragma once

// Laguerre-type orthonormal bases f_{k,+-a,m;l} of L^2((0,inf), r^{N-3+2<k>+-a} dr)
// and quadrature for radial inner products.

#include <complex>
#include <vector>

#include "kaharm/exp_monomial.hpp"
#include "kaharm/rational.hpp"

namespace kaharm {

enum class Branch { Positive, Negative };

inline const char* branch_name(Branch b) { return b == Branch::Positive ? "+a" : "-a"; }

/// lambda_{k,a,m} = (N - 2 + 2<k> + 2m) / a, for either sign of a.
Rational lambda_param(int N, const Rational& k_index, const Rational& a, int m);

/// Parameters of one radial sector. `a` is the magnitude (> 0); `branch`
/// selects +a or -a.
struct LaguerreBasisSpec {
  int N = 1;
  Rational k_index{0};
  Rational a{1};
  int m = 0;
  Branch branch = Branch::Positive;

  /// From a signed deformation parameter (a != 0); the sign picks the branch.
  static LaguerreBasisSpec from_signed(int N, Rational k_index, const Rational& signed_a, int m);

  Rational signed_a() const { return branch == Branch::Positive ? a : Rational(-a); }
  /// N - 2 + 2<k>
  Rational shift() const { return Rational(N - 2) + 2 * k_index; }
  /// lambda_{k,+-a,m} on this branch (negated on the -a branch).
  Rational lambda() const { return lambda_param(N, k_index, signed_a(), m); }
  /// lambda_{k,a,m} with a > 0; the Laguerre parameter on both branches.
  Rational laguerre_parameter() const { return lambda_param(N, k_index, a, m); }
  /// d in r^d dr: N - 3 + 2<k> +- a.
  Rational measure_exponent() const { return Rational(N - 3) + 2 * k_index + signed_a(); }

  bool hypothesis_holds() const;
  /// Throws BranchHypothesisViolated unless lambda > -1 (+a) or lambda < 1 (-a).
  void validate() const;
};

/// Unnormalised basis function with exact coefficients:
///   +a: r^m L_l^{(lambda)}((2/a) r^a) exp(-r^a / a)
///   -a: r^{-(N-2+2<k>+m)} L_l^{(lambda)}((2/a) r^{-a}) exp(-r^{-a} / a)
/// where lambda = lambda_{k,a,m}. The Gamma ratio in the Laguerre
/// coefficients is a finite product, so everything stays rational.
ExpMonomialQ basis_rational_part(const LaguerreBasisSpec& spec, int l);

/// (2^{lambda+1} l! / (a^lambda Gamma(lambda+l+1)))^{1/2}, lambda = lambda_{k,a,m}.
double basis_normalization(const LaguerreBasisSpec& spec, int l);

/// Orthonormal f_{k,+-a,m;l} expanded into the radial class.
ExpMonomialD basis_function(const LaguerreBasisSpec& spec, int l);

/// Stable pointwise value of f_{k,+-a,m;l}(r) (Laguerre recurrence, no expansion).
double basis_value(const LaguerreBasisSpec& spec, int l, double r);

/// int_0^inf f(r) conj(g(r)) r^d dr. The product is split into groups
/// c r^p exp(-Q r^s); each group is mapped by t = Q r^s onto a generalized
/// Gauss-Laguerre rule whose parameter makes the integrand a polynomial in t.
/// Throws DivergentIntegrand when a group is not integrable.
std::complex<double> inner_product(const ExpMonomialD& f, const ExpMonomialD& g, const Rational& d,
                                   int nodes = 128);

/// The same integral with exact coefficients. Each group is summed exactly as
/// Gamma(nu) / (|s| Q^nu) * sum_j c_j (nu)_{n_j} Q^{-n_j}, so cancellation between
/// terms costs no precision; only the common Gamma factor is rounded.
std::complex<double> inner_product(const ExpMonomialQ& f, const ExpMonomialQ& g, const Rational& d);

/// <f_i, f_j> for i, j < L through the exact inner product.
std::vector<std::vector<double>> gram_matrix(const LaguerreBasisSpec& spec, int L);

/// Quadrature on the measure of one branch, built from the Gauss-Laguerre rule
/// with parameter lambda_{k,a,m} through t = (2/a) r^{+-a}. Integrates
/// products f_{l} conj(f_{j}) of the branch basis exactly for l + j < 2n.
class BranchQuadrature {
 public:
  explicit BranchQuadrature(const LaguerreBasisSpec& spec, int nodes = 128);

  const LaguerreBasisSpec& spec() const { return spec_; }
  const std::vector<double>& radii() const { return radii_; }
  const std::vector<double>& t_nodes() const { return t_; }
  const std::vector<double>& log_weights() const { return log_weights_; }

  /// int_0^inf h(r) r^d dr ~ sum_i W_i h(r_i), d the branch measure exponent.
  template <typename Fn>
  std::complex<double> integrate(Fn&& h) const {
    std::complex<double> sum{};
    for (std::size_t i = 0; i < radii_.size(); ++i) {
      const std::complex<double> v = h(radii_[i]);
      if (v == std::complex<double>{}) continue;
      sum += std::exp(log_weights_[i]) * v;
    }
    return sum;
  }

  /// Basis values f_l(radii[i]) for l < L, row-major [l][i].
  std::vector<std::vector<double>> basis_table(int L) const;

 private:
  LaguerreBasisSpec spec_;
  std::vector<double> radii_;
  std::vector<double> t_;
  std::vector<double> log_weights_;
};

}  // namespace kaharm
