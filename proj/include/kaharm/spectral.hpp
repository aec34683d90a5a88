#pragma once

// Coefficients in the f_{k,+-a,m;l} bases, the Laguerre semigroup and the
// generalized Fourier transform acting diagonally on them.

#include <complex>
#include <vector>

#include "kaharm/exp_monomial.hpp"
#include "kaharm/laguerre_basis.hpp"
#include "kaharm/polynomial.hpp"
#include "kaharm/sl2.hpp"

namespace kaharm {

struct SpectralCoefficients {
  LaguerreBasisSpec spec;
  std::vector<std::complex<double>> coeffs;
  /// ||f - sum_l c_l f_l|| by the branch quadrature; 0 for coefficient vectors not built by expand.
  double residual = 0.0;

  int truncation() const { return static_cast<int>(coeffs.size()); }
  double norm_squared() const;
};

/// c_l = <f, f_l> in L^2(r^d dr) for l < L, by the branch quadrature and the
/// recurrence for f_l. Throws DivergentIntegrand when f is not square integrable.
SpectralCoefficients expand(const ExpMonomialD& f, const LaguerreBasisSpec& spec, int L = 32, int nodes = 128);

/// sum_l c_l f_l(r)
std::complex<double> synthesize(const SpectralCoefficients& c, double r);

/// ||sum_l c_l f_l||^2 by quadrature on the branch measure.
double synthesis_norm_squared(const SpectralCoefficients& c, int nodes = 128);

/// e^{-z(lambda+2l+1)} on +a (needs Re z >= 0), e^{-z(lambda-2l-1)} on -a
/// (needs Re z <= 0). Throws UnboundedRegime otherwise.
std::complex<double> semigroup_multiplier(const LaguerreBasisSpec& spec, std::complex<double> z, int l);

SpectralCoefficients laguerre_semigroup(std::complex<double> z, const SpectralCoefficients& c);

/// The multiplier of the transform as e^{i pi phi}, phi in [0, 2):
/// +a: phi = -(m/a + l), -a: phi = 1 + m/a + l, reduced mod 2.
Rational ft_phase(const LaguerreBasisSpec& spec, int l);

/// e^{i pi phi} with the quarter turns returned exactly.
std::complex<double> unit_phase(const Rational& phi);

std::complex<double> ft_multiplier(const LaguerreBasisSpec& spec, int l);

/// Throws BranchHypothesisViolated unless lambda_{k,+-a,0} satisfies the branch condition.
void validate_ft(const LaguerreBasisSpec& spec);

SpectralCoefficients generalized_ft(const SpectralCoefficients& c);
SpectralCoefficients inverse_generalized_ft(const SpectralCoefficients& c);

/// |ft_multiplier - e^{i pi (lambda_0 + 1)/2} * semigroup_multiplier(i pi / 2)|
double ft_semigroup_defect(const LaguerreBasisSpec& spec, int l);

struct SphericalSector {
  int m = 0;
  PolynomialD p;
  SpectralCoefficients radial;
};

struct SphericalDecomposition {
  std::vector<SphericalSector> sectors;
};

/// Applies generalized_ft sector by sector. Throws MixedConfiguration when
/// sectors disagree on (N, <k>, a, branch) or a sector's m differs from its spec.
SphericalDecomposition ft_full(const SphericalDecomposition& d);

/// sum_l |e^{-z mu_l}|^2 summed until the terms vanish, and its closed form
/// e^{-2x(nu+1)} / (1 - e^{-4x}) with x = |Re z|, nu = lambda on +a and -lambda on -a.
double hilbert_schmidt_sum(const LaguerreBasisSpec& spec, std::complex<double> z);
double hilbert_schmidt_closed_form(const LaguerreBasisSpec& spec, std::complex<double> z);

/// Both identities kappa o Lambda_a(z) = Lambda_{-a}(-z) o kappa and
/// kappa o F_a = -(F_{-a})^{-1} o kappa, first on multipliers (l < L,
/// tolerance 1e-12) and then on functions: the +a side is expanded, transformed,
/// resynthesized and mapped by kappa pointwise; the -a side expands kappa f.
/// `plus` must be a +a spec.
IdentityReport intertwine_check_ft(const LaguerreBasisSpec& plus, const std::vector<ExpMonomialD>& corpus,
                                   int L = 32, int nodes = 128);

}  // namespace kaharm
