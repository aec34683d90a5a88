#pragma once

// Functions on R^N \ {0} written as finite sums p(x) f(|x|), and the
// operators H_{k,a}, E+_{k,a}, E-_{k,a} acting on them.

#include <complex>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "kaharm/dunkl.hpp"
#include "kaharm/exp_monomial.hpp"
#include "kaharm/polynomial.hpp"
#include "kaharm/sl2.hpp"

namespace kaharm {

/// x -> p(x) f(|x|)
struct PolarTerm {
  PolynomialQ p;
  ExpMonomialQ f;
};

struct PolarKeyLess {
  bool operator()(const std::pair<Exponent, RadialKey>& a, const std::pair<Exponent, RadialKey>& b) const {
    if (a.first != b.first) return GradedLexLess{}(a.first, b.first);
    return a.second < b.second;
  }
};

class PolarSum {
 public:
  using Canonical = std::map<std::pair<Exponent, RadialKey>, GaussianRational, PolarKeyLess>;

  explicit PolarSum(int dimension) : dim_(dimension) {}

  /// The function p(x) f(|x|).
  static PolarSum product(PolynomialQ p, ExpMonomialQ f);
  /// The spherical tensor p (x) f : r omega -> p(omega) f(r), for p homogeneous
  /// of degree m, stored as p(x) * r^{-m} f(r). Throws InputNotPolarForm for
  /// non-homogeneous p.
  static PolarSum spherical(const PolynomialQ& p, const ExpMonomialQ& f);

  int dimension() const { return dim_; }
  const std::vector<PolarTerm>& terms() const { return terms_; }
  void add(PolynomialQ p, ExpMonomialQ f);

  PolarSum& operator+=(const PolarSum& o);
  friend PolarSum operator+(PolarSum a, const PolarSum& b) { return a += b; }
  PolarSum& operator*=(const GaussianRational& s);
  friend PolarSum operator*(PolarSum a, const GaussianRational& s) { return a *= s; }
  friend PolarSum operator-(PolarSum a, const PolarSum& b) { return a += b * GaussianRational(-1); }

  /// Fully expanded coefficient map keyed by (monomial, radial key). Two sums
  /// built through the same operators compare equal through this form.
  Canonical canonical() const;
  bool is_zero() const { return canonical().empty(); }
  friend bool operator==(const PolarSum& a, const PolarSum& b) { return a.canonical() == b.canonical(); }

  std::complex<double> operator()(std::span<const double> x) const;

 private:
  int dim_;
  std::vector<PolarTerm> terms_;
};

/// pi_{k,a}(X) applied to a polar sum: H = (N-2+2<k>+a)/a + (2/a)E,
/// E+ = (i/a)|x|^a, E- = (i/a)|x|^{2-a} Delta_k. Delta_k on p(x) g(|x|) uses
/// g (Delta_k p) + 2 (g'/r) E p + p (g'' + (N-1+2<k>) g'/r), which holds since
/// g(|x|) is reflection invariant. Exact; needs a rational root system.
PolarSum full_apply(const MultiplicityFunction& k, const Rational& a, const Sl2Element& x, const PolarSum& f);

/// Radial part g with pi_{k,a}(X)(p (x) f) = p (x) g, for p in H_k^m. Throws
/// NotKHarmonic when p is not k-harmonic of degree m.
ExpMonomialQ radial_factorization(const MultiplicityFunction& k, const Rational& a, const Sl2Element& x,
                                  const PolynomialQ& p, int m, const ExpMonomialQ& f);

}  // namespace kaharm
