#pragma once

// Radial functions on (0, inf) of the form sum c * r^gamma * exp(-q r^s),
// with rational gamma, q >= 0, s. The class is closed under
// theta = r d/dr, multiplication by r^d, linear combination and the
// substitution transforms f(r) -> r^beta f(r^alpha).

#include <cmath>
#include <complex>
#include <map>
#include <ostream>
#include <tuple>

#include "kaharm/errors.hpp"
#include "kaharm/rational.hpp"

namespace kaharm {

/// (gamma, q, s) of a term; pure powers carry q = s = 0.
struct RadialKey {
  Rational gamma{0};
  Rational q{0};
  Rational s{0};

  bool has_decay() const { return q != 0; }

  friend bool operator<(const RadialKey& a, const RadialKey& b) {
    if (a.q != b.q) return a.q < b.q;
    if (a.s != b.s) return a.s < b.s;
    return a.gamma < b.gamma;
  }
  friend bool operator==(const RadialKey& a, const RadialKey& b) {
    return a.gamma == b.gamma && a.q == b.q && a.s == b.s;
  }
};

template <typename C>
class ExpMonomial {
 public:
  using Terms = std::map<RadialKey, C>;

  ExpMonomial() = default;

  static ExpMonomial term(C c, Rational gamma, Rational q = Rational(0), Rational s = Rational(0)) {
    ExpMonomial f;
    f.add_term(std::move(c), std::move(gamma), std::move(q), std::move(s));
    return f;
  }
  static ExpMonomial power(Rational gamma) { return term(scalar_from_rational<C>(Rational(1)), std::move(gamma)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(C c, Rational gamma, Rational q = Rational(0), Rational s = Rational(0)) {
    if (q < 0) throw NotInClass("exp(-q r^s) with q < 0 grows; not in the radial class");
    if (q == 0) {
      s = 0;
    } else if (s == 0) {
      throw NotInClass("decaying term needs a nonzero exponent s");
    }
    add_term(RadialKey{std::move(gamma), std::move(q), std::move(s)}, std::move(c));
  }

  void add_term(const RadialKey& key, C c) {
    if (is_zero_scalar(c)) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_scalar(it->second)) terms_.erase(it);
    }
  }

  ExpMonomial& operator+=(const ExpMonomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  ExpMonomial& operator-=(const ExpMonomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  ExpMonomial& operator*=(const C& s) {
    if (is_zero_scalar(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend ExpMonomial operator+(ExpMonomial a, const ExpMonomial& b) { return a += b; }
  friend ExpMonomial operator-(ExpMonomial a, const ExpMonomial& b) { return a -= b; }
  friend ExpMonomial operator*(ExpMonomial a, const C& s) { return a *= s; }
  friend ExpMonomial operator*(const C& s, ExpMonomial a) { return a *= s; }
  friend ExpMonomial operator-(ExpMonomial a) { return a *= scalar_from_rational<C>(Rational(-1)); }
  friend bool operator==(const ExpMonomial& a, const ExpMonomial& b) { return a.terms_ == b.terms_; }

  /// r^d * f
  ExpMonomial times_power(const Rational& d) const {
    ExpMonomial out;
    for (const auto& [k, c] : terms_) out.add_term(RadialKey{k.gamma + d, k.q, k.s}, c);
    return out;
  }

  /// theta f = r f'(r): c r^g e^{-q r^s} -> c g r^g e^{-q r^s} - c q s r^{g+s} e^{-q r^s}.
  ExpMonomial theta() const {
    ExpMonomial out;
    for (const auto& [k, c] : terms_) {
      out.add_term(k, c * scalar_from_rational<C>(k.gamma));
      if (k.has_decay()) {
        out.add_term(RadialKey{k.gamma + k.s, k.q, k.s}, c * scalar_from_rational<C>(-k.q * k.s));
      }
    }
    return out;
  }

  /// r^beta f(r^alpha): c r^g e^{-q r^s} -> c r^{beta + alpha g} e^{-q r^{alpha s}}.
  ExpMonomial substitute(const Rational& alpha, const Rational& beta) const {
    if (alpha == 0) throw std::domain_error("substitution exponent must be nonzero");
    ExpMonomial out;
    for (const auto& [k, c] : terms_) out.add_term(RadialKey{beta + alpha * k.gamma, k.q, alpha * k.s}, c);
    return out;
  }

  /// Pointwise product; defined when every pair of exponential factors merges
  /// (equal s, or at least one pure power). Throws NotInClass otherwise.
  friend ExpMonomial operator*(const ExpMonomial& a, const ExpMonomial& b) {
    ExpMonomial out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        RadialKey k;
        k.gamma = ka.gamma + kb.gamma;
        if (!ka.has_decay()) {
          k.q = kb.q;
          k.s = kb.s;
        } else if (!kb.has_decay()) {
          k.q = ka.q;
          k.s = ka.s;
        } else if (ka.s == kb.s) {
          k.q = ka.q + kb.q;
          k.s = ka.s;
        } else {
          throw NotInClass("product of exp(-q r^s) factors with different s");
        }
        out.add_term(k, ca * cb);
      }
    return out;
  }

  /// Complex conjugate (coefficients only; exponents are real).
  ExpMonomial conj() const {
    ExpMonomial out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, conj_scalar(c));
    return out;
  }

  std::complex<double> operator()(double r) const {
    std::complex<double> sum{};
    for (const auto& [k, c] : terms_) {
      double v = std::pow(r, to_double(k.gamma));
      if (k.has_decay()) v *= std::exp(-to_double(k.q) * std::pow(r, to_double(k.s)));
      sum += to_complex(c) * v;
    }
    return sum;
  }

  /// sum |c| r^gamma exp(-q r^s): the rounding scale of operator()(r).
  double abs_sum(double r) const {
    double sum = 0.0;
    for (const auto& [k, c] : terms_) {
      double v = std::pow(r, to_double(k.gamma));
      if (k.has_decay()) v *= std::exp(-to_double(k.q) * std::pow(r, to_double(k.s)));
      sum += std::abs(to_complex(c)) * v;
    }
    return sum;
  }

  /// Coefficient-wise conversion to another scalar type.
  template <typename D>
  ExpMonomial<D> convert() const {
    ExpMonomial<D> out;
    for (const auto& [k, c] : terms_) {
      if constexpr (std::is_same_v<D, std::complex<double>>) {
        out.add_term(k, to_complex(c));
      } else {
        out.add_term(k, D(c));
      }
    }
    return out;
  }

  /// Largest |coefficient|.
  double max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& [k, c] : terms_) m = std::max(m, std::abs(to_complex(c)));
    return m;
  }

 private:
  Terms terms_;
};

using ExpMonomialQ = ExpMonomial<GaussianRational>;
using ExpMonomialD = ExpMonomial<std::complex<double>>;

template <typename C>
std::ostream& operator<<(std::ostream& os, const ExpMonomial<C>& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [k, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ")*r^" << format_rational(k.gamma);
    if (k.has_decay()) os << "*exp(-" << format_rational(k.q) << "*r^" << format_rational(k.s) << ')';
  }
  return os;
}

}  // namespace kaharm
