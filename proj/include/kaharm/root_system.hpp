#pragma once

// Reduced root systems (no crystallographic condition), their finite Coxeter
// groups, multiplicity functions and the associated weight functions.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kaharm/errors.hpp"
#include "kaharm/rational.hpp"

namespace kaharm {

using VectorD = std::vector<double>;
using VectorQ = std::vector<Rational>;

/// Dense row-major square matrix over F; just enough for group generation.
template <typename F>
struct SquareMatrix {
  int n = 0;
  std::vector<F> entries;

  static SquareMatrix identity(int n) {
    SquareMatrix m{n, std::vector<F>(static_cast<std::size_t>(n * n), F(0))};
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  F& operator()(int i, int j) { return entries[static_cast<std::size_t>(i * n + j)]; }
  const F& operator()(int i, int j) const { return entries[static_cast<std::size_t>(i * n + j)]; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix c{a.n, std::vector<F>(a.entries.size(), F(0))};
    for (int i = 0; i < a.n; ++i)
      for (int k = 0; k < a.n; ++k) {
        if (a(i, k) == F(0)) continue;
        for (int j = 0; j < a.n; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n == b.n && a.entries == b.entries;
  }

  SquareMatrix transpose() const {
    SquareMatrix t{n, entries};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t(i, j) = (*this)(j, i);
    return t;
  }

  std::vector<F> apply(std::span<const F> x) const {
    std::vector<F> y(static_cast<std::size_t>(n), F(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }
};

using MatrixD = SquareMatrix<double>;
using MatrixQ = SquareMatrix<Rational>;

template <typename F>
F dot(std::span<const F> a, std::span<const F> b) {
  F s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// r_alpha(x) = x - (2<alpha,x>/|alpha|^2) alpha. Throws ZeroRoot for alpha = 0.
template <typename F>
std::vector<F> reflect(std::span<const F> alpha, std::span<const F> x) {
  if (alpha.size() != x.size()) throw DimensionMismatch("reflect: vector sizes differ");
  const F norm2 = dot(alpha, alpha);
  if (norm2 == F(0)) throw ZeroRoot("reflection through the zero vector");
  const F factor = F(2) * dot(alpha, x) / norm2;
  std::vector<F> y(x.begin(), x.end());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] -= factor * alpha[i];
  return y;
}

inline VectorD reflect(const VectorD& alpha, const VectorD& x) {
  return reflect<double>(std::span<const double>(alpha), std::span<const double>(x));
}
inline VectorQ reflect(const VectorQ& alpha, const VectorQ& x) {
  return reflect<Rational>(std::span<const Rational>(alpha), std::span<const Rational>(x));
}

/// Matrix of r_alpha.
template <typename F>
SquareMatrix<F> reflection_matrix(std::span<const F> alpha) {
  const int n = static_cast<int>(alpha.size());
  const F norm2 = dot(alpha, alpha);
  if (norm2 == F(0)) throw ZeroRoot("reflection through the zero vector");
  auto m = SquareMatrix<F>::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) -= F(2) * alpha[i] * alpha[j] / norm2;
  return m;
}

/// A validated reduced root system. Immutable once built.
///
/// Roots are always available as doubles; when every coordinate was given as
/// an exact rational the exact coordinates are kept as well and the Dunkl
/// polynomial calculus can run in exact arithmetic.
class RootSystem {
 public:
  static constexpr double kFloatTolerance = 1e-9;

  /// Checks (R0)-(R2) exactly and picks the lexicographic positive subsystem.
  static RootSystem validate(int dimension, std::vector<VectorQ> roots);
  /// Float-backed variant for irrational systems; closure is tested to `tol`.
  static RootSystem validate(int dimension, std::vector<VectorD> roots,
                             double tol = kFloatTolerance);

  int dimension() const { return dimension_; }
  std::size_t size() const { return roots_.size(); }
  const std::vector<VectorD>& roots() const { return roots_; }
  bool is_exact() const { return exact_roots_.has_value(); }
  /// Throws NotExact for float-backed systems.
  const std::vector<VectorQ>& exact_roots() const;

  /// Indices into roots() of the chosen positive subsystem, in input order.
  const std::vector<std::size_t>& positive_indices() const { return positive_; }
  std::vector<VectorD> positive_roots() const;

  /// Index of the root equal to `v` (to tolerance), if any.
  std::optional<std::size_t> find(std::span<const double> v) const;

  /// Roots as vectors over F (Rational requires an exact system).
  template <typename F>
  std::vector<std::vector<F>> roots_as() const;

 private:
  RootSystem() = default;

  int dimension_ = 0;
  std::vector<VectorD> roots_;
  std::optional<std::vector<VectorQ>> exact_roots_;
  std::vector<std::size_t> positive_;
  double tol_ = kFloatTolerance;
};

template <>
inline std::vector<VectorD> RootSystem::roots_as<double>() const {
  return roots_;
}
template <>
inline std::vector<VectorQ> RootSystem::roots_as<Rational>() const {
  return exact_roots();
}

/// Named presets: "A1", "A1xA1", "A1^3" (alias "A1xA1xA1"), "I2(p)" for p >= 1.
/// I2(4) is realised as B2 with rational roots; other I2(p) with p > 2 are float-backed.
RootSystem preset_root_system(std::string_view name);

/// Closure of the reflections {r_alpha} under composition (double matrices).
/// Throws GroupTooLarge when more than `max_order` elements appear.
std::vector<MatrixD> coxeter_group(const RootSystem& roots, std::size_t max_order = 10000);
/// Exact counterpart; requires an exact root system.
std::vector<MatrixQ> coxeter_group_exact(const RootSystem& roots, std::size_t max_order = 10000);

/// Multiplicity function k: constant on Coxeter orbits of roots. Carries its
/// root system so every downstream formula needs just this one object.
class MultiplicityFunction {
 public:
  struct OrbitValue {
    VectorD orbit_root;
    Rational k;
  };

  /// Same value on every root.
  static MultiplicityFunction uniform(RootSystem roots, Rational k);
  /// One value per orbit, addressed by any root of the orbit. Every orbit
  /// must be covered exactly once.
  static MultiplicityFunction from_orbits(RootSystem roots, const std::vector<OrbitValue>& values);
  /// One value per root (in roots() order); throws NotOrbitConstant if the
  /// values are not constant on orbits.
  static MultiplicityFunction from_root_values(RootSystem roots, std::vector<Rational> values);

  const RootSystem& root_system() const { return roots_; }
  int dimension() const { return roots_.dimension(); }
  const Rational& value(std::size_t root_index) const { return values_.at(root_index); }
  const std::vector<Rational>& values() const { return values_; }
  /// <k> = sum of k over positive roots.
  const Rational& index() const { return index_; }
  bool is_zero() const;
  bool is_nonnegative() const;

  /// Orbit id of every root (ids are 0.. in order of first appearance).
  const std::vector<std::size_t>& orbit_ids() const { return orbit_ids_; }

 private:
  MultiplicityFunction(RootSystem roots, std::vector<Rational> values);

  RootSystem roots_;
  std::vector<Rational> values_;
  std::vector<std::size_t> orbit_ids_;
  Rational index_{0};
};

/// Partition of roots into Coxeter orbits (closure under the root reflections).
std::vector<std::size_t> root_orbits(const RootSystem& roots);

/// w_k(omega) = prod_{alpha in R+} |<alpha, omega>|^{2 k_alpha}; omega must be a unit vector.
double weight_wk(const MultiplicityFunction& k, std::span<const double> omega);

/// w_{k,a}(x) = |x|^{a-2} prod_{alpha in R+} |<alpha, x>|^{2 k_alpha}, x != 0.
double weight_wka(const MultiplicityFunction& k, double a, std::span<const double> x);

}  // namespace kaharm
