#include "kaharm/root_system.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <sstream>
#include <unordered_set>

namespace kaharm {

namespace {

template <typename F>
bool is_zero_vector(const std::vector<F>& v, double tol) {
  for (const auto& c : v) {
    if constexpr (std::is_same_v<F, double>) {
      if (std::abs(c) > tol) return false;
    } else {
      if (c != 0) return false;
    }
  }
  return true;
}

template <typename F>
bool lex_positive(const std::vector<F>& v, double tol) {
  for (const auto& c : v) {
    if constexpr (std::is_same_v<F, double>) {
      if (c > tol) return true;
      if (c < -tol) return false;
    } else {
      if (c > 0) return true;
      if (c < 0) return false;
    }
  }
  return false;
}

template <typename F>
bool vectors_equal(const std::vector<F>& a, const std::vector<F>& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if constexpr (std::is_same_v<F, double>) {
      if (std::abs(a[i] - b[i]) > tol) return false;
    } else {
      if (a[i] != b[i]) return false;
    }
  }
  return true;
}

// Parallel test: |<a,b>|^2 == |a|^2 |b|^2 (Cauchy-Schwarz equality).
template <typename F>
bool proportional(const std::vector<F>& a, const std::vector<F>& b, double tol) {
  const F ab = dot<F>(a, b);
  const F aa = dot<F>(a, a);
  const F bb = dot<F>(b, b);
  if constexpr (std::is_same_v<F, double>) {
    return std::abs(ab * ab - aa * bb) <= tol * aa * bb;
  } else {
    return ab * ab == aa * bb;
  }
}

template <typename F>
std::string describe(const std::vector<F>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    if constexpr (std::is_same_v<F, double>) {
      os << v[i];
    } else {
      os << format_rational(v[i]);
    }
  }
  os << ')';
  return os.str();
}

template <typename F>
std::optional<std::size_t> find_vector(const std::vector<std::vector<F>>& set,
                                       const std::vector<F>& v, double tol) {
  for (std::size_t i = 0; i < set.size(); ++i)
    if (vectors_equal(set[i], v, tol)) return i;
  return std::nullopt;
}

// Shared (R0)-(R2) validation; returns positive indices.
template <typename F>
std::vector<std::size_t> check_axioms(int dimension, const std::vector<std::vector<F>>& roots,
                                      double tol) {
  if (dimension <= 0) throw DimensionMismatch("root system dimension must be positive");
  for (const auto& r : roots) {
    if (static_cast<int>(r.size()) != dimension) {
      throw DimensionMismatch("root " + describe(r) + " has wrong dimension");
    }
    if (is_zero_vector(r, tol)) throw ZeroRoot("the zero vector is not a root");
  }
  // (R2): the only roots on the line through alpha are +-alpha.
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (!proportional(roots[i], roots[j], tol)) continue;
      std::vector<F> neg = roots[i];
      for (auto& c : neg) c = -c;
      if (!vectors_equal(roots[j], neg, tol)) {
        throw ProportionalRootViolation("roots " + describe(roots[i]) + " and " +
                                        describe(roots[j]) + " are proportional but not opposite");
      }
    }
  }
  // (R1): closed under every root reflection.
  for (const auto& alpha : roots) {
    for (const auto& beta : roots) {
      const auto image = reflect<F>(std::span<const F>(alpha), std::span<const F>(beta));
      if (!find_vector(roots, image, tol)) {
        throw ReflectionClosureViolation("r_" + describe(alpha) + " maps " + describe(beta) +
                                         " to " + describe(image) + ", which is not a root");
      }
    }
  }
  std::vector<std::size_t> positive;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (lex_positive(roots[i], tol)) positive.push_back(i);
  return positive;
}

std::string matrix_key(const MatrixQ& m) {
  std::string key;
  for (const auto& e : m.entries) {
    key += format_rational(e);
    key += ';';
  }
  return key;
}

std::string matrix_key(const MatrixD& m) {
  std::string key;
  for (double e : m.entries) {
    // Snap to a 1e-7 grid; group elements of a finite group are well separated.
    const long long q = std::llround(e * 1e7);
    key += std::to_string(q == 0 ? 0 : q);
    key += ';';
  }
  return key;
}

template <typename F>
std::vector<SquareMatrix<F>> generate_group(int n, const std::vector<std::vector<F>>& generators,
                                            std::size_t max_order) {
  std::vector<SquareMatrix<F>> gens;
  for (const auto& g : generators) gens.push_back(reflection_matrix<F>(std::span<const F>(g)));

  std::vector<SquareMatrix<F>> elements{SquareMatrix<F>::identity(n)};
  std::unordered_set<std::string> seen{matrix_key(elements.front())};
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t current = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      SquareMatrix<F> next = g * elements[current];
      if (!seen.insert(matrix_key(next)).second) continue;
      if (elements.size() >= max_order) {
        throw GroupTooLarge("Coxeter group exceeds " + std::to_string(max_order) + " elements");
      }
      elements.push_back(std::move(next));
      frontier.push_back(elements.size() - 1);
    }
  }
  return elements;
}

}  // namespace

RootSystem RootSystem::validate(int dimension, std::vector<VectorQ> roots) {
  RootSystem rs;
  rs.positive_ = check_axioms<Rational>(dimension, roots, 0.0);
  rs.dimension_ = dimension;
  rs.tol_ = kFloatTolerance;
  for (const auto& r : roots) {
    VectorD d;
    for (const auto& c : r) d.push_back(to_double(c));
    rs.roots_.push_back(std::move(d));
  }
  rs.exact_roots_ = std::move(roots);
  return rs;
}

RootSystem RootSystem::validate(int dimension, std::vector<VectorD> roots, double tol) {
  RootSystem rs;
  rs.positive_ = check_axioms<double>(dimension, roots, tol);
  rs.dimension_ = dimension;
  rs.tol_ = tol;
  rs.roots_ = std::move(roots);
  return rs;
}

const std::vector<VectorQ>& RootSystem::exact_roots() const {
  if (!exact_roots_) throw NotExact("root system is float-backed; exact coordinates unavailable");
  return *exact_roots_;
}

std::vector<VectorD> RootSystem::positive_roots() const {
  std::vector<VectorD> out;
  for (auto i : positive_) out.push_back(roots_[i]);
  return out;
}

std::optional<std::size_t> RootSystem::find(std::span<const double> v) const {
  const VectorD target(v.begin(), v.end());
  if (static_cast<int>(target.size()) != dimension_) return std::nullopt;
  return find_vector(roots_, target, tol_);
}

RootSystem preset_root_system(std::string_view name) {
  auto q = [](long long v) { return Rational(v); };
  if (name == "A1") return RootSystem::validate(1, {{q(1)}, {q(-1)}});
  if (name == "A1xA1") {
    return RootSystem::validate(2, {{q(1), q(0)}, {q(-1), q(0)}, {q(0), q(1)}, {q(0), q(-1)}});
  }
  if (name == "A1^3" || name == "A1xA1xA1") {
    std::vector<VectorQ> roots;
    for (int i = 0; i < 3; ++i)
      for (int sign : {1, -1}) {
        VectorQ v(3, q(0));
        v[static_cast<std::size_t>(i)] = q(sign);
        roots.push_back(v);
      }
    return RootSystem::validate(3, std::move(roots));
  }
  if (name.starts_with("I2(") && name.ends_with(")")) {
    const std::string digits(name.substr(3, name.size() - 4));
    int p = 0;
    try {
      p = std::stoi(digits);
    } catch (const std::exception&) {
      throw ConfigError("bad dihedral preset '" + std::string(name) + "'");
    }
    if (p < 1) throw ConfigError("dihedral order must be positive in '" + std::string(name) + "'");
    if (p == 1) return RootSystem::validate(2, {{q(1), q(0)}, {q(-1), q(0)}});
    if (p == 2) return preset_root_system("A1xA1");
    if (p == 4) {
      std::vector<VectorQ> roots;
      for (int s : {1, -1}) {
        roots.push_back({q(s), q(0)});
        roots.push_back({q(0), q(s)});
        roots.push_back({q(s), q(s)});
        roots.push_back({q(s), q(-s)});
      }
      return RootSystem::validate(2, std::move(roots));
    }
    std::vector<VectorD> roots;
    for (int j = 0; j < 2 * p; ++j) {
      const double t = std::numbers::pi * j / p;
      roots.push_back({std::cos(t), std::sin(t)});
    }
    return RootSystem::validate(2, std::move(roots));
  }
  throw ConfigError("unknown root system preset '" + std::string(name) + "'");
}

std::vector<MatrixD> coxeter_group(const RootSystem& roots, std::size_t max_order) {
  return generate_group<double>(roots.dimension(), roots.positive_roots(), max_order);
}

std::vector<MatrixQ> coxeter_group_exact(const RootSystem& roots, std::size_t max_order) {
  std::vector<VectorQ> gens;
  for (auto i : roots.positive_indices()) gens.push_back(roots.exact_roots()[i]);
  return generate_group<Rational>(roots.dimension(), gens, max_order);
}

std::vector<std::size_t> root_orbits(const RootSystem& roots) {
  const auto& rs = roots.roots();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> ids(rs.size(), kUnset);
  std::size_t next_id = 0;
  for (std::size_t start = 0; start < rs.size(); ++start) {
    if (ids[start] != kUnset) continue;
    ids[start] = next_id;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      for (const auto& beta : rs) {
        const VectorD image = reflect(beta, rs[cur]);
        const auto idx = roots.find(image);
        if (!idx) throw ReflectionClosureViolation("orbit computation left the root system");
        if (ids[*idx] == kUnset) {
          ids[*idx] = next_id;
          queue.push_back(*idx);
        }
      }
    }
    ++next_id;
  }
  return ids;
}

MultiplicityFunction::MultiplicityFunction(RootSystem roots, std::vector<Rational> values)
    : roots_(std::move(roots)), values_(std::move(values)), orbit_ids_(root_orbits(roots_)) {
  if (values_.size() != roots_.size()) {
    throw DimensionMismatch("multiplicity needs one value per root");
  }
  std::map<std::size_t, Rational> per_orbit;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    auto [it, inserted] = per_orbit.emplace(orbit_ids_[i], values_[i]);
    if (!inserted && it->second != values_[i]) {
      throw NotOrbitConstant("multiplicity differs on roots " + std::to_string(i) +
                             " of the same Coxeter orbit");
    }
  }
  for (auto i : roots_.positive_indices()) index_ += values_[i];
}

MultiplicityFunction MultiplicityFunction::uniform(RootSystem roots, Rational k) {
  std::vector<Rational> values(roots.size(), k);
  return MultiplicityFunction(std::move(roots), std::move(values));
}

MultiplicityFunction MultiplicityFunction::from_orbits(RootSystem roots,
                                                       const std::vector<OrbitValue>& values) {
  const auto ids = root_orbits(roots);
  std::map<std::size_t, Rational> per_orbit;
  for (const auto& ov : values) {
    const auto idx = roots.find(ov.orbit_root);
    if (!idx) throw NotOrbitConstant("orbit representative is not a root");
    if (!per_orbit.emplace(ids[*idx], ov.k).second) {
      throw NotOrbitConstant("two multiplicity entries address the same orbit");
    }
  }
  std::vector<Rational> per_root;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const auto it = per_orbit.find(ids[i]);
    if (it == per_orbit.end()) {
      throw NotOrbitConstant("no multiplicity given for the orbit of root " + std::to_string(i));
    }
    per_root.push_back(it->second);
  }
  return MultiplicityFunction(std::move(roots), std::move(per_root));
}

MultiplicityFunction MultiplicityFunction::from_root_values(RootSystem roots,
                                                            std::vector<Rational> values) {
  return MultiplicityFunction(std::move(roots), std::move(values));
}

bool MultiplicityFunction::is_zero() const {
  for (const auto& v : values_)
    if (v != 0) return false;
  return true;
}

bool MultiplicityFunction::is_nonnegative() const {
  for (const auto& v : values_)
    if (v < 0) return false;
  return true;
}

double weight_wk(const MultiplicityFunction& k, std::span<const double> omega) {
  const auto& rs = k.root_system();
  if (static_cast<int>(omega.size()) != rs.dimension()) {
    throw DimensionMismatch("weight_wk: wrong dimension");
  }
  const double norm = std::sqrt(dot(omega, omega));
  if (std::abs(norm - 1.0) > 1e-12) throw std::domain_error("weight_wk: omega must be a unit vector");
  double w = 1.0;
  for (auto i : rs.positive_indices()) {
    const double kv = to_double(k.value(i));
    if (kv == 0.0) continue;
    w *= std::pow(std::abs(dot<double>(rs.roots()[i], omega)), 2.0 * kv);
  }
  return w;
}

double weight_wka(const MultiplicityFunction& k, double a, std::span<const double> x) {
  const auto& rs = k.root_system();
  if (static_cast<int>(x.size()) != rs.dimension()) {
    throw DimensionMismatch("weight_wka: wrong dimension");
  }
  const double norm = std::sqrt(dot(x, x));
  if (norm == 0.0) throw std::domain_error("weight_wka: x must be nonzero");
  double w = std::pow(norm, a - 2.0);
  for (auto i : rs.positive_indices()) {
    const double kv = to_double(k.value(i));
    if (kv == 0.0) continue;
    w *= std::pow(std::abs(dot<double>(rs.roots()[i], x)), 2.0 * kv);
  }
  return w;
}

}  // namespace kaharm
