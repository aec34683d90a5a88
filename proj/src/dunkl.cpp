#include "kaharm/dunkl.hpp"

#include <Eigen/Dense>

namespace kaharm {

std::vector<Exponent> monomials_of_degree(int n, int m) {
  std::vector<Exponent> out;
  if (m < 0) return out;
  Exponent e(static_cast<std::size_t>(n), 0);
  // Lexicographically descending enumeration of compositions of m into n parts.
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i + 1 == e.size()) {
      e[i] = remaining;
      out.push_back(e);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      e[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  rec(rec, 0, m);
  return out;
}

PolynomialD to_float(const PolynomialQ& p) {
  PolynomialD out(p.dimension());
  for (const auto& [e, c] : p.terms()) out.add_term(e, to_double(c));
  return out;
}

namespace {

// Coefficient rows over the union of monomials, columns in descending graded-lex order.
template <typename F>
std::vector<std::vector<F>> coefficient_rows(const std::vector<Polynomial<F>>& polys,
                                             std::vector<Exponent>& columns) {
  std::map<Exponent, std::size_t, GradedLexLess> index;
  for (const auto& p : polys)
    for (const auto& [e, c] : p.terms()) index.emplace(e, 0);
  columns.clear();
  for (auto it = index.rbegin(); it != index.rend(); ++it) {
    it->second = columns.size();
    columns.push_back(it->first);
  }
  std::vector<std::vector<F>> rows;
  for (const auto& p : polys) {
    std::vector<F> row(columns.size(), F(0));
    for (const auto& [e, c] : p.terms()) row[index.at(e)] = c;
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename F>
std::vector<std::vector<F>> kernel_vectors(const std::vector<std::vector<F>>& columns_of_map,
                                           std::size_t rows);

// Exact kernel by Gauss-Jordan elimination of the map matrix.
template <>
std::vector<VectorQ> kernel_vectors<Rational>(const std::vector<VectorQ>& cols, std::size_t rows) {
  const std::size_t n = cols.size();
  std::vector<VectorQ> matrix(rows, VectorQ(n, Rational(0)));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < rows; ++i) matrix[i][j] = cols[j][i];
  const auto pivots = row_reduce(matrix);
  std::vector<VectorQ> kernel;
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    VectorQ v(n, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -matrix[r][free];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

// Float kernel: right singular vectors with singular value below 1e-9.
template <>
std::vector<VectorD> kernel_vectors<double>(const std::vector<VectorD>& cols, std::size_t rows) {
  const auto n = static_cast<Eigen::Index>(cols.size());
  std::vector<VectorD> kernel;
  if (rows == 0) {
    for (Eigen::Index j = 0; j < n; ++j) {
      VectorD v(cols.size(), 0.0);
      v[static_cast<std::size_t>(j)] = 1.0;
      kernel.push_back(std::move(v));
    }
    return kernel;
  }
  Eigen::MatrixXd a(static_cast<Eigen::Index>(rows), n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) a(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const Eigen::MatrixXd& v = svd.matrixV();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double s = j < sv.size() ? sv(j) : 0.0;
    if (s >= 1e-9) continue;
    VectorD vec(cols.size());
    for (Eigen::Index i = 0; i < n; ++i) vec[static_cast<std::size_t>(i)] = v(i, j);
    kernel.push_back(std::move(vec));
  }
  return kernel;
}

}  // namespace

template <typename F>
std::size_t polynomial_rank(const std::vector<Polynomial<F>>& polys) {
  if (polys.empty()) return 0;
  std::vector<Exponent> columns;
  auto rows = coefficient_rows(polys, columns);
  return row_reduce(rows).size();
}

template <typename F>
HarmonicBasis<F> k_harmonic_basis(const MultiplicityFunction& k, int m) {
  if (m < 0) throw std::domain_error("k_harmonic_basis: negative degree");
  const int n = k.dimension();
  const DunklData<F> data(k);
  const auto source = monomials_of_degree(n, m);
  const auto target = monomials_of_degree(n, m - 2);
  std::map<Exponent, std::size_t> target_index;
  for (std::size_t i = 0; i < target.size(); ++i) target_index.emplace(target[i], i);

  std::vector<std::vector<F>> image_columns;
  for (const auto& e : source) {
    const auto image = dunkl_laplacian(data, Polynomial<F>::monomial(n, e, F(1)));
    std::vector<F> col(target.size(), F(0));
    for (const auto& [te, c] : image.terms()) {
      const auto it = target_index.find(te);
      if (it == target_index.end()) {
        throw InexactDivision("Dunkl Laplacian left the homogeneous component of degree m-2");
      }
      col[it->second] = c;
    }
    image_columns.push_back(std::move(col));
  }

  auto kernel = kernel_vectors<F>(image_columns, target.size());
  row_reduce(kernel);

  HarmonicBasis<F> out;
  out.degree = m;
  for (const auto& v : kernel) {
    Polynomial<F> p(n);
    for (std::size_t j = 0; j < source.size(); ++j) p.add_term(source[j], v[j]);
    out.basis.push_back(std::move(p));
  }
  return out;
}

template <typename F>
bool is_k_harmonic(const DunklData<F>& data, const Polynomial<F>& p, int m) {
  if (p.is_zero()) return true;
  if (!p.is_homogeneous() || p.degree() != m) return false;
  const auto lap = dunkl_laplacian(data, p);
  if constexpr (std::is_same_v<F, double>) {
    return lap.max_abs_coefficient() <= 1e-9 * std::max(1.0, p.max_abs_coefficient());
  } else {
    return lap.is_zero();
  }
}

template HarmonicBasis<Rational> k_harmonic_basis<Rational>(const MultiplicityFunction&, int);
template HarmonicBasis<double> k_harmonic_basis<double>(const MultiplicityFunction&, int);
template std::size_t polynomial_rank<Rational>(const std::vector<PolynomialQ>&);
template std::size_t polynomial_rank<double>(const std::vector<PolynomialD>&);
template bool is_k_harmonic<Rational>(const DunklData<Rational>&, const PolynomialQ&, int);
template bool is_k_harmonic<double>(const DunklData<double>&, const PolynomialD&, int);

}  // namespace kaharm
