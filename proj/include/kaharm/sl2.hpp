#pragma once

// The sl(2) triple (H, E+, E-) in its radial realisation on (0, inf), the
// automorphism tau, and the identity checks built on top of it.

#include <optional>
#include <string>
#include <vector>

#include "kaharm/exp_monomial.hpp"
#include "kaharm/laguerre_basis.hpp"
#include "kaharm/rational.hpp"

namespace kaharm {

/// Element c_h h + c_p e+ + c_m e- of sl(2, C) with exact coefficients.
struct Sl2Element {
  GaussianRational h;
  GaussianRational ep;
  GaussianRational em;

  static Sl2Element basis_h() { return {1, 0, 0}; }
  static Sl2Element basis_ep() { return {0, 1, 0}; }
  static Sl2Element basis_em() { return {0, 0, 1}; }
  /// Cayley transforms: k = [[0,-i],[i,0]], n+ = (1/2)[[i,-1],[-1,-i]], n- = (1/2)[[-i,-1],[-1,i]].
  static Sl2Element cayley_k();
  static Sl2Element cayley_np();
  static Sl2Element cayley_nm();

  friend Sl2Element operator+(const Sl2Element& x, const Sl2Element& y) {
    return {x.h + y.h, x.ep + y.ep, x.em + y.em};
  }
  friend Sl2Element operator-(const Sl2Element& x, const Sl2Element& y) {
    return {x.h - y.h, x.ep - y.ep, x.em - y.em};
  }
  friend Sl2Element operator*(const GaussianRational& s, const Sl2Element& x) {
    return {s * x.h, s * x.ep, s * x.em};
  }
  friend Sl2Element operator-(const Sl2Element& x) { return {-x.h, -x.ep, -x.em}; }
  friend bool operator==(const Sl2Element& x, const Sl2Element& y) {
    return x.h == y.h && x.ep == y.ep && x.em == y.em;
  }
};

/// Lie bracket from [h,e+] = 2e+, [h,e-] = -2e-, [e+,e-] = h.
Sl2Element bracket(const Sl2Element& x, const Sl2Element& y);

/// h -> h, e+- -> -e+-.
Sl2Element tau(const Sl2Element& x);

/// (N, <k>, a, m) for the radial operators; a may have either sign.
struct RadialOperatorSpec {
  int N = 1;
  Rational k_index{0};
  Rational a{1};
  int m = 0;

  static RadialOperatorSpec from_basis(const LaguerreBasisSpec& spec) {
    return {spec.N, spec.k_index, spec.signed_a(), spec.m};
  }
  /// N - 2 + 2<k>
  Rational shift() const { return Rational(N - 2) + 2 * k_index; }
  RadialOperatorSpec with_a(Rational new_a) const { return {N, k_index, std::move(new_a), m}; }
};

/// H^(m) f = ((N-2+2<k>+a)/a) f + (2/a) theta f
template <typename C>
ExpMonomial<C> radial_H(const RadialOperatorSpec& spec, const ExpMonomial<C>& f) {
  ExpMonomial<C> out = f * scalar_from_rational<C>((spec.shift() + spec.a) / spec.a);
  out += f.theta() * scalar_from_rational<C>(Rational(2) / spec.a);
  return out;
}

/// E+^(m) f = (i/a) r^a f
template <typename C>
ExpMonomial<C> radial_Ep(const RadialOperatorSpec& spec, const ExpMonomial<C>& f) {
  return f.times_power(spec.a) * (imaginary_unit<C>() * scalar_from_rational<C>(Rational(1) / spec.a));
}

/// E-^(m) f = (i/a) r^{-a} (theta - m)(theta + N - 2 + 2<k> + m) f
template <typename C>
ExpMonomial<C> radial_Em(const RadialOperatorSpec& spec, const ExpMonomial<C>& f) {
  const ExpMonomial<C> inner = f.theta() + f * scalar_from_rational<C>(spec.shift() + spec.m);
  const ExpMonomial<C> outer = inner.theta() - inner * scalar_from_rational<C>(Rational(spec.m));
  return outer.times_power(-spec.a) * (imaginary_unit<C>() * scalar_from_rational<C>(Rational(1) / spec.a));
}

/// pi^(m)(X) f = c_h H^(m) f + c_p E+^(m) f + c_m E-^(m) f, exact on the class.
template <typename C>
ExpMonomial<C> radial_apply(const RadialOperatorSpec& spec, const Sl2Element& x, const ExpMonomial<C>& f) {
  auto coef = [](const GaussianRational& z) {
    if constexpr (std::is_same_v<C, GaussianRational>) {
      return z;
    } else {
      return z.to_complex();
    }
  };
  ExpMonomial<C> out;
  if (!x.h.is_zero()) out += radial_H(spec, f) * coef(x.h);
  if (!x.ep.is_zero()) out += radial_Ep(spec, f) * coef(x.ep);
  if (!x.em.is_zero()) out += radial_Em(spec, f) * coef(x.em);
  return out;
}

/// Fixed 20-function corpus of the radial class with exact coefficients:
/// pure powers, both decay directions, fractional exponents, complex coefficients.
std::vector<ExpMonomialQ> radial_corpus();

struct IdentityCheck {
  std::string name;
  double max_defect = 0.0;  ///< largest |coefficient| (symbolic) or |error| (numeric)
  bool passed = false;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool passed() const;
  double max_defect() const;
};

/// The six bracket relations [pi(X), pi(Y)] = pi([X, Y]) for the pairs
/// (h,e+), (h,e-), (e+,e-), (k,n+), (k,n-), (n+,n-), applied exactly to every
/// corpus function. Also confirms the abstract bracket table.
IdentityReport verify_sl2_relations(const RadialOperatorSpec& spec,
                                    const std::vector<ExpMonomialQ>& corpus = radial_corpus());

/// Ladder relations of the Cayley elements on f_{k,+-a,m;l}, sampled at
/// r in {1/4, 1/2, 1, 2, 4}. Errors for nonzero targets are relative to the sum
/// of the absolute term values of the target at r (finite at its zeros); absolute for
/// the annihilation cases (n- f_0 on +a, n+ f_0 on -a).
IdentityReport ladder_check(const LaguerreBasisSpec& spec, int l);

/// The sample radii used by ladder_check.
const std::vector<double>& ladder_sample_radii();

/// If pi(k) maps the exact basis function with index l to mu times itself,
/// returns mu (exact); otherwise nullopt.
std::optional<Rational> exact_compact_eigenvalue(const LaguerreBasisSpec& spec, int l);

/// lambda + 2l + 1 on +a, lambda_{-} - 2l - 1 on -a.
Rational compact_eigenvalue_formula(const LaguerreBasisSpec& spec, int l);

}  // namespace kaharm
