#pragma once

// Dunkl operators, the Dunkl Laplacian, the Euler operator and k-harmonic
// polynomial spaces. Exact over Rational for rational root systems; the
// double instantiation serves float-backed (irrational) systems.

#include <vector>

#include "kaharm/polynomial.hpp"
#include "kaharm/root_system.hpp"

namespace kaharm {

template <typename F>
F field_from_rational(const Rational& q) {
  if constexpr (std::is_same_v<F, double>) {
    return to_double(q);
  } else {
    return q;
  }
}

/// Positive roots, reflections and multiplicities over F, prepared once per
/// operator application batch.
template <typename F>
struct DunklData {
  struct Entry {
    std::vector<F> alpha;
    SquareMatrix<F> reflection;
    F k;
  };
  int dimension = 0;
  std::vector<Entry> positive;

  explicit DunklData(const MultiplicityFunction& k) : dimension(k.dimension()) {
    const auto roots = k.root_system().template roots_as<F>();
    for (auto i : k.root_system().positive_indices()) {
      const F kv = field_from_rational<F>(k.value(i));
      if (field_is_zero(kv)) continue;
      positive.push_back({roots[i], reflection_matrix<F>(std::span<const F>(roots[i])), kv});
    }
  }
};

/// T_i p = d_i p + sum_{alpha in R+} k_alpha alpha_i (p - p o r_alpha) / <alpha, x>.
template <typename F>
Polynomial<F> dunkl_operator(const DunklData<F>& data, int i, const Polynomial<F>& p) {
  if (p.dimension() != data.dimension) throw DimensionMismatch("dunkl_operator: dimension");
  Polynomial<F> out = p.derivative(i);
  for (const auto& entry : data.positive) {
    const F& ai = entry.alpha[static_cast<std::size_t>(i)];
    if (field_is_zero(ai)) continue;
    Polynomial<F> diff = p - p.substitute_linear(entry.reflection);
    if (diff.is_zero()) continue;
    out += divide_by_linear(diff, std::span<const F>(entry.alpha)) * (entry.k * ai);
  }
  return out;
}

template <typename F>
Polynomial<F> dunkl_operator(const MultiplicityFunction& k, int i, const Polynomial<F>& p) {
  return dunkl_operator(DunklData<F>(k), i, p);
}

/// Delta_k p = sum_i T_i^2 p.
template <typename F>
Polynomial<F> dunkl_laplacian(const DunklData<F>& data, const Polynomial<F>& p) {
  Polynomial<F> out(p.dimension());
  for (int i = 0; i < data.dimension; ++i) out += dunkl_operator(data, i, dunkl_operator(data, i, p));
  return out;
}

template <typename F>
Polynomial<F> dunkl_laplacian(const MultiplicityFunction& k, const Polynomial<F>& p) {
  return dunkl_laplacian(DunklData<F>(k), p);
}

/// Classical Laplacian sum_i d_i^2 p.
template <typename F>
Polynomial<F> classical_laplacian(const Polynomial<F>& p) {
  Polynomial<F> out(p.dimension());
  for (int i = 0; i < p.dimension(); ++i) out += p.derivative(i).derivative(i);
  return out;
}

/// Delta_k via the one-shot difference-quotient form
///   Delta p + sum k_alpha (2<grad p, alpha>/<alpha,x> - |alpha|^2 (p - p o r_alpha)/<alpha,x>^2),
/// combined over the common denominator <alpha,x>^2 and divided out exactly.
/// Independent of the T_i route; used as its cross-check.
template <typename F>
Polynomial<F> dunkl_laplacian_difference_form(const DunklData<F>& data, const Polynomial<F>& p) {
  const int n = p.dimension();
  Polynomial<F> out = classical_laplacian(p);
  for (const auto& entry : data.positive) {
    const auto alpha = std::span<const F>(entry.alpha);
    const Polynomial<F> form = Polynomial<F>::linear_form(alpha);
    Polynomial<F> grad_alpha(n);
    for (int i = 0; i < n; ++i) grad_alpha += p.derivative(i) * entry.alpha[static_cast<std::size_t>(i)];
    const F norm2 = dot(alpha, alpha);
    // numerator over <alpha,x>^2
    Polynomial<F> numerator = grad_alpha * form * F(2) - (p - p.substitute_linear(entry.reflection)) * norm2;
    const Polynomial<F> once = divide_by_linear(numerator, alpha);
    out += divide_by_linear(once, alpha) * entry.k;
  }
  return out;
}

/// E p = sum_i x_i d_i p.
template <typename F>
Polynomial<F> euler_operator(const Polynomial<F>& p) {
  Polynomial<F> out(p.dimension());
  for (const auto& [e, c] : p.terms()) {
    const int d = total_degree(e);
    if (d != 0) out.add_term(e, c * F(d));
  }
  return out;
}

/// Basis of H_k^m: homogeneous degree-m polynomials annihilated by Delta_k.
template <typename F>
struct HarmonicBasis {
  int degree = 0;
  std::vector<Polynomial<F>> basis;
  std::size_t dimension() const { return basis.size(); }
};

/// Reduced row echelon form of `rows` in place (columns in the given order);
/// returns pivot columns. Floating entries below `tol` count as zero.
template <typename F>
std::vector<std::size_t> row_reduce(std::vector<std::vector<F>>& rows, double tol = 1e-9) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t best = r;
    if constexpr (std::is_same_v<F, double>) {
      for (std::size_t i = r + 1; i < rows.size(); ++i)
        if (std::abs(rows[i][c]) > std::abs(rows[best][c])) best = i;
      if (std::abs(rows[best][c]) <= tol) continue;
    } else {
      while (best < rows.size() && rows[best][c] == 0) ++best;
      if (best == rows.size()) continue;
    }
    std::swap(rows[r], rows[best]);
    const F pivot = rows[r][c];
    for (auto& v : rows[r]) v /= pivot;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || field_is_zero(rows[i][c])) continue;
      const F factor = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  if constexpr (std::is_same_v<F, double>) {
    for (auto& row : rows)
      for (auto& v : row)
        if (std::abs(v) <= tol) v = 0.0;
  }
  return pivots;
}

/// Rank of a list of polynomials (exact for Rational).
template <typename F>
std::size_t polynomial_rank(const std::vector<Polynomial<F>>& polys);

/// Kernel of Delta_k : P^m -> P^{m-2}, in reduced echelon form with respect
/// to the descending graded-lex monomial order.
template <typename F>
HarmonicBasis<F> k_harmonic_basis(const MultiplicityFunction& k, int m);

/// True when p is homogeneous of degree m and Delta_k p = 0 (exact for Rational,
/// to relative 1e-9 for double).
template <typename F>
bool is_k_harmonic(const DunklData<F>& data, const Polynomial<F>& p, int m);

extern template HarmonicBasis<Rational> k_harmonic_basis<Rational>(const MultiplicityFunction&, int);
extern template HarmonicBasis<double> k_harmonic_basis<double>(const MultiplicityFunction&, int);
extern template std::size_t polynomial_rank<Rational>(const std::vector<PolynomialQ>&);
extern template std::size_t polynomial_rank<double>(const std::vector<PolynomialD>&);
extern template bool is_k_harmonic<Rational>(const DunklData<Rational>&, const PolynomialQ&, int);
extern template bool is_k_harmonic<double>(const DunklData<double>&, const PolynomialD&, int);

}  // namespace kaharm
