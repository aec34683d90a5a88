#pragma once

// The transforms kappa_{alpha,beta} f(r) = r^beta f(r^alpha) and
// kappa_{alpha,beta} F(x) = |x|^beta F(|x|^{alpha-1} x).

#include <string>

#include "kaharm/exp_monomial.hpp"
#include "kaharm/polar.hpp"
#include "kaharm/rational.hpp"
#include "kaharm/root_system.hpp"
#include "kaharm/sl2.hpp"

namespace kaharm {

struct KappaParams {
  Rational alpha{1};
  Rational beta{0};

  KappaParams() = default;
  KappaParams(Rational alpha_, Rational beta_) : alpha(std::move(alpha_)), beta(std::move(beta_)) {
    if (alpha == 0) throw std::domain_error("kappa: alpha must be nonzero");
  }

  /// kappa_{-1, -(N-2+2<k>)}, the involution exchanging a and -a.
  static KappaParams intertwiner(int N, const Rational& k_index) {
    return {Rational(-1), -(Rational(N - 2) + 2 * k_index)};
  }

  friend bool operator==(const KappaParams& x, const KappaParams& y) {
    return x.alpha == y.alpha && x.beta == y.beta;
  }
};

/// Parameters of kappa_{p1} o kappa_{p2}: (alpha alpha', beta + alpha beta').
KappaParams kappa_compose(const KappaParams& p1, const KappaParams& p2);

template <typename C>
ExpMonomial<C> kappa_radial(const KappaParams& params, const ExpMonomial<C>& f) {
  return f.substitute(params.alpha, params.beta);
}

/// On each p(x) f(|x|), splits p into homogeneous parts p_m and uses
/// p_m(|x|^{alpha-1} x) = |x|^{m(alpha-1)} p_m(x).
PolarSum kappa_full(const KappaParams& params, const PolarSum& f);

struct UnitarityReport {
  double source_norm = 0.0;  ///< ||f|| in L^2(r^d dr)
  double target_norm = 0.0;  ///< ||kappa f|| in L^2(|alpha| r^{alpha d + alpha - 2 beta - 1} dr)
  double relative_error = 0.0;
  bool passed = false;
};

/// Exponent of the target measure: alpha d + alpha - 2 beta - 1.
Rational kappa_target_exponent(const KappaParams& params, const Rational& d);

/// Compares both norms by quadrature; passes at relative 1e-8.
UnitarityReport kappa_unitarity_check(const KappaParams& params, const ExpMonomialD& f, const Rational& d,
                                      int nodes = 128);

/// kappa o pi^(m)_{k,a}(X) - pi^(m)_{k,-a}(tau X) o kappa on the corpus for
/// X in {h, e+, e-, k, n+, n-}, and kappa^2 = id, with kappa the intertwiner.
/// Exact; every check passes only with defect 0.
IdentityReport radial_intertwining_check(const RadialOperatorSpec& spec, const std::vector<ExpMonomialQ>& corpus);

struct FullIntertwiningReport {
  /// The relations with H_{k,-a}, E+-_{k,-a} on the right, and kappa^2 = id.
  IdentityReport relations;
  /// kappa o H_{k,a} = H_{k,a} o kappa, the other reading of the H relation.
  IdentityCheck same_sign_h;
};

/// The same relations for the operators on R^N, applied to polar sums.
FullIntertwiningReport full_intertwining_check(const MultiplicityFunction& k, const Rational& a,
                                               const std::vector<PolarSum>& corpus);

}  // namespace kaharm
