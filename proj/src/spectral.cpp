#include "kaharm/spectral.hpp"

#include <cmath>
#include <numbers>

#include "kaharm/errors.hpp"
#include "kaharm/kappa.hpp"

namespace kaharm {

double SpectralCoefficients::norm_squared() const {
  double s = 0.0;
  for (const auto& c : coeffs) s += std::norm(c);
  return s;
}

SpectralCoefficients expand(const ExpMonomialD& f, const LaguerreBasisSpec& spec, int L, int nodes) {
  spec.validate();
  if (L < 0) throw std::invalid_argument("expand: negative truncation");
  SpectralCoefficients out{spec, std::vector<std::complex<double>>(L), 0.0};
  if (f.is_zero()) return out;

  // Also the decay check: throws DivergentIntegrand when f is not in L^2(r^d dr).
  inner_product(f, f, spec.measure_exponent(), nodes);
  const BranchQuadrature quad(spec, nodes);
  const auto table = quad.basis_table(L);
  const auto& radii = quad.radii();
  std::vector<std::complex<double>> weighted(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) weighted[i] = std::exp(quad.log_weights()[i]) * f(radii[i]);
  for (int l = 0; l < L; ++l) {
    std::complex<double> s{};
    for (std::size_t i = 0; i < radii.size(); ++i) s += weighted[i] * table[l][i];
    out.coeffs[l] = s;
  }
  double residual2 = 0.0;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    std::complex<double> v = f(radii[i]);
    for (int l = 0; l < L; ++l) v -= out.coeffs[l] * table[l][i];
    residual2 += std::exp(quad.log_weights()[i]) * std::norm(v);
  }
  out.residual = std::sqrt(residual2);
  return out;
}

std::complex<double> synthesize(const SpectralCoefficients& c, double r) {
  std::complex<double> s{};
  for (int l = 0; l < c.truncation(); ++l) {
    if (c.coeffs[l] == std::complex<double>{}) continue;
    s += c.coeffs[l] * basis_value(c.spec, l, r);
  }
  return s;
}

double synthesis_norm_squared(const SpectralCoefficients& c, int nodes) {
  const BranchQuadrature quad(c.spec, nodes);
  const auto table = quad.basis_table(c.truncation());
  double s = 0.0;
  for (std::size_t i = 0; i < quad.radii().size(); ++i) {
    std::complex<double> v{};
    for (int l = 0; l < c.truncation(); ++l) v += c.coeffs[l] * table[l][i];
    s += std::exp(quad.log_weights()[i]) * std::norm(v);
  }
  return s;
}

std::complex<double> semigroup_multiplier(const LaguerreBasisSpec& spec, std::complex<double> z, int l) {
  if (spec.branch == Branch::Positive && z.real() < 0) {
    throw UnboundedRegime("semigroup on the +a branch needs Re z >= 0");
  }
  if (spec.branch == Branch::Negative && z.real() > 0) {
    throw UnboundedRegime("semigroup on the -a branch needs Re z <= 0");
  }
  return std::exp(-z * to_double(compact_eigenvalue_formula(spec, l)));
}

SpectralCoefficients laguerre_semigroup(std::complex<double> z, const SpectralCoefficients& c) {
  SpectralCoefficients out = c;
  out.residual = 0.0;
  for (int l = 0; l < c.truncation(); ++l) out.coeffs[l] *= semigroup_multiplier(c.spec, z, l);
  return out;
}

namespace {

Rational reduce_mod2(Rational phi) {
  const Rational two(2);
  const std::int64_t turns = floor_to_int(phi / two);
  phi -= two * Rational(turns);
  return phi;
}

}  // namespace

Rational ft_phase(const LaguerreBasisSpec& spec, int l) {
  const Rational base = Rational(spec.m) / spec.a + l;
  return reduce_mod2(spec.branch == Branch::Positive ? Rational(-base) : Rational(base + 1));
}

std::complex<double> unit_phase(const Rational& phi) {
  const Rational p = reduce_mod2(phi);
  if (p == 0) return {1.0, 0.0};
  if (p == Rational(1, 2)) return {0.0, 1.0};
  if (p == 1) return {-1.0, 0.0};
  if (p == Rational(3, 2)) return {0.0, -1.0};
  // Evaluate on (-1, 1] so the argument stays small.
  const double x = to_double(p > 1 ? Rational(p - 2) : p) * std::numbers::pi;
  return {std::cos(x), std::sin(x)};
}

std::complex<double> ft_multiplier(const LaguerreBasisSpec& spec, int l) { return unit_phase(ft_phase(spec, l)); }

void validate_ft(const LaguerreBasisSpec& spec) {
  LaguerreBasisSpec zero = spec;
  zero.m = 0;
  if (!zero.hypothesis_holds()) {
    throw BranchHypothesisViolated("generalized Fourier transform needs lambda_{k," +
                                   std::string(branch_name(spec.branch)) + ",0} = " +
                                   format_rational(zero.lambda()) +
                                   (spec.branch == Branch::Positive ? " > -1" : " < 1"));
  }
  spec.validate();
}

namespace {

SpectralCoefficients apply_ft(const SpectralCoefficients& c, bool inverse) {
  validate_ft(c.spec);
  SpectralCoefficients out = c;
  out.residual = 0.0;
  for (int l = 0; l < c.truncation(); ++l) {
    const std::complex<double> mult = ft_multiplier(c.spec, l);
    out.coeffs[l] *= inverse ? std::conj(mult) : mult;
  }
  return out;
}

}  // namespace

SpectralCoefficients generalized_ft(const SpectralCoefficients& c) { return apply_ft(c, false); }

SpectralCoefficients inverse_generalized_ft(const SpectralCoefficients& c) { return apply_ft(c, true); }

double ft_semigroup_defect(const LaguerreBasisSpec& spec, int l) {
  LaguerreBasisSpec zero = spec;
  zero.m = 0;
  const std::complex<double> i(0.0, 1.0);
  const double lambda0 = to_double(zero.lambda());
  const std::complex<double> via_semigroup =
      std::exp(i * std::numbers::pi * (lambda0 + 1.0) / 2.0) * semigroup_multiplier(spec, i * std::numbers::pi / 2.0, l);
  return std::abs(ft_multiplier(spec, l) - via_semigroup);
}

SphericalDecomposition ft_full(const SphericalDecomposition& d) {
  SphericalDecomposition out;
  if (d.sectors.empty()) return out;
  const LaguerreBasisSpec& ref = d.sectors.front().radial.spec;
  for (const auto& sector : d.sectors) {
    const LaguerreBasisSpec& s = sector.radial.spec;
    if (s.N != ref.N || s.k_index != ref.k_index || s.a != ref.a || s.branch != ref.branch) {
      throw MixedConfiguration("sectors of one decomposition must share (N, <k>, a, branch)");
    }
    if (s.m != sector.m) throw MixedConfiguration("sector degree disagrees with its radial spec");
  }
  out.sectors.reserve(d.sectors.size());
  for (const auto& sector : d.sectors) out.sectors.push_back({sector.m, sector.p, generalized_ft(sector.radial)});
  return out;
}

double hilbert_schmidt_sum(const LaguerreBasisSpec& spec, std::complex<double> z) {
  if (z.real() == 0) throw UnboundedRegime("Hilbert-Schmidt sum diverges for Re z = 0");
  double sum = 0.0;
  for (int l = 0; l < 10'000'000; ++l) {
    const double term = std::norm(semigroup_multiplier(spec, z, l));
    sum += term;
    if (term <= 1e-20 * sum) break;
  }
  return sum;
}

double hilbert_schmidt_closed_form(const LaguerreBasisSpec& spec, std::complex<double> z) {
  semigroup_multiplier(spec, z, 0);
  if (z.real() == 0) throw UnboundedRegime("Hilbert-Schmidt sum diverges for Re z = 0");
  const double x = std::abs(z.real());
  const double nu = to_double(spec.branch == Branch::Positive ? spec.lambda() : Rational(-spec.lambda()));
  return std::exp(-2.0 * x * (nu + 1.0)) / -std::expm1(-4.0 * x);
}

namespace {

constexpr double kPhaseTolerance = 1e-12;
constexpr double kFunctionTolerance = 1e-8;

double relative_gap(std::complex<double> a, std::complex<double> b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace

IdentityReport intertwine_check_ft(const LaguerreBasisSpec& plus, const std::vector<ExpMonomialD>& corpus, int L,
                                   int nodes) {
  if (plus.branch != Branch::Positive) throw std::invalid_argument("intertwine_check_ft expects the +a spec");
  LaguerreBasisSpec minus = plus;
  minus.branch = Branch::Negative;
  validate_ft(plus);
  validate_ft(minus);

  const std::vector<std::complex<double>> zs = {{0.0, 0.0}, {1.0, 0.0}, {0.5, 2.0}, {0.0, 3.0}};
  const std::complex<double> z_fn(0.5, 0.25);
  IdentityReport report;

  IdentityCheck ls_mult{"kappa Lambda_a(z) = Lambda_-a(-z) kappa [multipliers]", 0.0, true};
  IdentityCheck ft_mult{"kappa F_a = -(F_-a)^-1 kappa [multipliers]", 0.0, true};
  for (int l = 0; l < L; ++l) {
    for (const auto& z : zs) {
      ls_mult.max_defect = std::max(ls_mult.max_defect,
                                    relative_gap(semigroup_multiplier(plus, z, l), semigroup_multiplier(minus, -z, l)));
    }
    ft_mult.max_defect =
        std::max(ft_mult.max_defect, std::abs(ft_multiplier(plus, l) + 1.0 / ft_multiplier(minus, l)));
  }
  ls_mult.passed = ls_mult.max_defect <= kPhaseTolerance;
  ft_mult.passed = ft_mult.max_defect <= kPhaseTolerance;
  report.checks.push_back(ls_mult);
  report.checks.push_back(ft_mult);

  const KappaParams kappa = KappaParams::intertwiner(plus.N, plus.k_index);
  const double beta = to_double(kappa.beta);
  IdentityCheck ls_fn{"kappa Lambda_a(z) = Lambda_-a(-z) kappa [functions]", 0.0, true};
  IdentityCheck ft_fn{"kappa F_a = -(F_-a)^-1 kappa [functions]", 0.0, true};
  for (const auto& g : corpus) {
    const SpectralCoefficients cp = expand(g, plus, L, nodes);
    const SpectralCoefficients cm = expand(kappa_radial(kappa, g), minus, L, nodes);
    const SpectralCoefficients ls_left = laguerre_semigroup(z_fn, cp);
    const SpectralCoefficients ls_right = laguerre_semigroup(-z_fn, cm);
    const SpectralCoefficients ft_left = generalized_ft(cp);
    SpectralCoefficients ft_right = inverse_generalized_ft(cm);
    for (auto& c : ft_right.coeffs) c = -c;
    double scale = 1.0;
    for (double r : ladder_sample_radii()) scale = std::max(scale, std::abs(g(r)));
    for (double r : ladder_sample_radii()) {
      const double twist = std::pow(r, beta);
      ls_fn.max_defect = std::max(
          ls_fn.max_defect, std::abs(twist * synthesize(ls_left, 1.0 / r) - synthesize(ls_right, r)) / scale);
      ft_fn.max_defect = std::max(
          ft_fn.max_defect, std::abs(twist * synthesize(ft_left, 1.0 / r) - synthesize(ft_right, r)) / scale);
    }
  }
  ls_fn.passed = ls_fn.max_defect <= kFunctionTolerance;
  ft_fn.passed = ft_fn.max_defect <= kFunctionTolerance;
  report.checks.push_back(ls_fn);
  report.checks.push_back(ft_fn);
  return report;
}

}  // namespace kaharm
