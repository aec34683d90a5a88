#pragma once

// Multivariate polynomials over an exact (Rational) or floating (double) field.

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <vector>

#include "kaharm/errors.hpp"
#include "kaharm/rational.hpp"
#include "kaharm/root_system.hpp"

namespace kaharm {

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

/// All exponents of total degree m in n variables, in descending graded-lex order.
std::vector<Exponent> monomials_of_degree(int n, int m);

template <typename F>
inline bool field_is_zero(const F& c) {
  return c == F(0);
}

template <typename F>
class Polynomial {
 public:
  using Terms = std::map<Exponent, F, GradedLexLess>;

  explicit Polynomial(int dimension) : dim_(dimension) {
    if (dimension <= 0) throw DimensionMismatch("polynomial dimension must be positive");
  }

  static Polynomial constant(int dimension, F c) {
    Polynomial p(dimension);
    p.add_term(Exponent(static_cast<std::size_t>(dimension), 0), std::move(c));
    return p;
  }
  static Polynomial variable(int dimension, int i) {
    Exponent e(static_cast<std::size_t>(dimension), 0);
    e.at(static_cast<std::size_t>(i)) = 1;
    return monomial(dimension, std::move(e), F(1));
  }
  static Polynomial monomial(int dimension, Exponent e, F c) {
    Polynomial p(dimension);
    p.add_term(std::move(e), std::move(c));
    return p;
  }
  /// sum_i alpha_i x_i
  static Polynomial linear_form(std::span<const F> alpha) {
    Polynomial p(static_cast<int>(alpha.size()));
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      Exponent e(alpha.size(), 0);
      e[i] = 1;
      p.add_term(std::move(e), alpha[i]);
    }
    return p;
  }

  int dimension() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Highest total degree, or -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return total_degree(t.first) == d; });
  }

  Polynomial homogeneous_component(int m) const {
    Polynomial out(dim_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == m) out.terms_.emplace(e, c);
    return out;
  }

  F coefficient(const Exponent& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? F(0) : it->second;
  }

  void add_term(Exponent e, F c) {
    if (static_cast<int>(e.size()) != dim_) throw DimensionMismatch("exponent has wrong length");
    if (field_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (field_is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const F& s) {
    if (field_is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const F& s) { return a *= s; }
  friend Polynomial operator*(const F& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= F(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_dim(b);
    Polynomial out(a.dim_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add_term(std::move(e), ca * cb);
      }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  Polynomial derivative(int i) const {
    Polynomial out(dim_);
    const auto idx = static_cast<std::size_t>(i);
    for (const auto& [e, c] : terms_) {
      if (e[idx] == 0) continue;
      Exponent d(e);
      d[idx] -= 1;
      out.add_term(std::move(d), c * F(e[idx]));
    }
    return out;
  }

  /// p(Mx).
  Polynomial substitute_linear(const SquareMatrix<F>& m) const {
    if (m.n != dim_) throw DimensionMismatch("substitution matrix has wrong size");
    // Row j of M is the linear form replacing x_j; cache its powers.
    std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(dim_));
    for (int j = 0; j < dim_; ++j) {
      std::vector<F> row(static_cast<std::size_t>(dim_));
      for (int l = 0; l < dim_; ++l) row[static_cast<std::size_t>(l)] = m(j, l);
      powers[static_cast<std::size_t>(j)].push_back(constant(dim_, F(1)));
      powers[static_cast<std::size_t>(j)].push_back(linear_form(std::span<const F>(row)));
    }
    auto power = [&](int j, int k) -> const Polynomial& {
      auto& cache = powers[static_cast<std::size_t>(j)];
      while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * cache[1]);
      return cache[static_cast<std::size_t>(k)];
    };
    Polynomial out(dim_);
    for (const auto& [e, c] : terms_) {
      Polynomial term = constant(dim_, c);
      for (int j = 0; j < dim_; ++j)
        if (e[static_cast<std::size_t>(j)] > 0) term = term * power(j, e[static_cast<std::size_t>(j)]);
      out += term;
    }
    return out;
  }

  template <typename X>
  X evaluate(std::span<const X> x) const {
    if (static_cast<int>(x.size()) != dim_) throw DimensionMismatch("evaluation point has wrong size");
    X sum(0);
    for (const auto& [e, c] : terms_) {
      X term;
      if constexpr (std::is_same_v<F, Rational> && !std::is_same_v<X, Rational>) {
        term = X(to_double(c));
      } else {
        term = X(c);
      }
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) term *= x[i];
      sum += term;
    }
    return sum;
  }
  double operator()(std::span<const double> x) const { return evaluate<double>(x); }

  /// Drops coefficients with |c| <= tol (floating field only).
  Polynomial pruned(double tol) const {
    Polynomial out(dim_);
    for (const auto& [e, c] : terms_) {
      if constexpr (std::is_same_v<F, double>) {
        if (std::abs(c) <= tol) continue;
      }
      out.terms_.emplace(e, c);
    }
    return out;
  }

  /// Largest |coefficient| (as double).
  double max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) {
      if constexpr (std::is_same_v<F, double>) {
        m = std::max(m, std::abs(c));
      } else {
        m = std::max(m, std::abs(to_double(c)));
      }
    }
    return m;
  }

 private:
  void check_dim(const Polynomial& o) const {
    if (o.dim_ != dim_) throw DimensionMismatch("polynomials live in different dimensions");
  }

  int dim_;
  Terms terms_;
};

using PolynomialQ = Polynomial<Rational>;
using PolynomialD = Polynomial<double>;

/// Exact-to-float coefficient conversion.
PolynomialD to_float(const PolynomialQ& p);

/// Quotient of p by the linear form <alpha, x>. Throws InexactDivision if the
/// remainder is nonzero (exactly, or beyond `tol` relative scale for doubles).
template <typename F>
Polynomial<F> divide_by_linear(const Polynomial<F>& p, std::span<const F> alpha, double tol = 1e-9) {
  const int n = p.dimension();
  if (static_cast<int>(alpha.size()) != n) throw DimensionMismatch("linear form has wrong size");
  // Pivot on the coordinate with the largest |alpha_j|.
  std::size_t pivot = 0;
  for (std::size_t j = 1; j < alpha.size(); ++j) {
    if constexpr (std::is_same_v<F, double>) {
      if (std::abs(alpha[j]) > std::abs(alpha[pivot])) pivot = j;
    } else {
      if (abs(alpha[j]) > abs(alpha[pivot])) pivot = j;
    }
  }
  if (field_is_zero(alpha[pivot])) throw ZeroRoot("division by the zero linear form");

  const double scale = p.max_abs_coefficient();
  // Bucket terms by their power of x_pivot and eliminate from the top down.
  std::map<int, Polynomial<F>> by_power;
  for (const auto& [e, c] : p.terms()) {
    auto it = by_power.try_emplace(e[pivot], Polynomial<F>(n)).first;
    it->second.add_term(e, c);
  }
  Polynomial<F> quotient(n);
  Polynomial<F> remainder(n);
  while (!by_power.empty()) {
    auto top = std::prev(by_power.end());
    const int k = top->first;
    Polynomial<F> layer = std::move(top->second);
    by_power.erase(top);
    if (k == 0) {
      remainder += layer;
      continue;
    }
    for (const auto& [e, c] : layer.terms()) {
      Exponent q(e);
      q[pivot] -= 1;
      const F qc = c / alpha[pivot];
      quotient.add_term(q, qc);
      // Subtract qc * x^q * (alpha . x - alpha_pivot x_pivot); lands in layer k-1.
      for (std::size_t j = 0; j < alpha.size(); ++j) {
        if (j == pivot || field_is_zero(alpha[j])) continue;
        Exponent r(q);
        r[j] += 1;
        auto it = by_power.try_emplace(k - 1, Polynomial<F>(n)).first;
        it->second.add_term(std::move(r), -qc * alpha[j]);
      }
    }
  }
  if constexpr (std::is_same_v<F, double>) {
    if (remainder.max_abs_coefficient() > tol * std::max(1.0, scale)) {
      throw InexactDivision("polynomial is not divisible by the linear form");
    }
  } else {
    if (!remainder.is_zero()) throw InexactDivision("polynomial is not divisible by the linear form");
  }
  return quotient;
}

template <typename F>
std::ostream& operator<<(std::ostream& os, const Polynomial<F>& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    if constexpr (std::is_same_v<F, Rational>) {
      os << format_rational(it->second);
    } else {
      os << it->second;
    }
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      os << "*x" << (i + 1);
      if (it->first[i] > 1) os << '^' << it->first[i];
    }
  }
  return os;
}

}  // namespace kaharm
