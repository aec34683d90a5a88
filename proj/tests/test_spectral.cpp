#include <cmath>
#include <numbers>

#include "doctest.h"
#include "kaharm/errors.hpp"
#include "kaharm/spectral.hpp"
#include "test_support.hpp"

using namespace kaharm;
using kaharm::testing::q;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;
const cd kI(0.0, 1.0);

std::vector<LaguerreBasisSpec> sample_specs() {
  return {{1, q(0), q(2), 0, Branch::Positive},    {3, q(1, 2), q(1), 2, Branch::Positive},
          {2, q(1), q(1, 2), 1, Branch::Positive}, {2, q(0), q(2), 0, Branch::Negative},
          {1, q(1, 2), q(2), 1, Branch::Negative}, {3, q(0), q(2), 0, Branch::Negative}};
}

ExpMonomialD combo(const LaguerreBasisSpec& spec, const std::vector<std::pair<int, cd>>& parts) {
  ExpMonomialD f;
  for (const auto& [l, c] : parts) f += basis_function(spec, l) * c;
  return f;
}

// Decaying functions for either branch.
std::vector<ExpMonomialD> decaying_corpus(const LaguerreBasisSpec& spec) {
  const Rational s = spec.branch == Branch::Positive ? Rational(2) : Rational(-2);
  const Rational g = spec.branch == Branch::Positive ? Rational(spec.m) : Rational(-(spec.shift() + spec.m));
  std::vector<ExpMonomialD> out;
  out.push_back(ExpMonomialD::term(1.0, g, q(1), s));
  out.push_back(ExpMonomialD::term(cd(0.5, -1.0), g + s, q(3, 4), s));
  ExpMonomialD mixed = ExpMonomialD::term(1.0, g, q(2), s);
  mixed.add_term(-0.25, g + 2 * s, q(2), s);
  out.push_back(mixed);
  return out;
}

}  // namespace

TEST_CASE("expand examples") {
  for (const auto& spec : sample_specs()) {
    const SpectralCoefficients c2 = expand(basis_function(spec, 2), spec, 8);
    for (int l = 0; l < 8; ++l) CHECK(std::abs(c2.coeffs[l] - (l == 2 ? 1.0 : 0.0)) < 1e-9);
    const SpectralCoefficients c03 = expand(combo(spec, {{0, 1.0}, {3, 2.0}}), spec, 8);
    for (int l = 0; l < 8; ++l) CHECK(std::abs(c03.coeffs[l] - (l == 0 ? 1.0 : l == 3 ? 2.0 : 0.0)) < 1e-9);
    const SpectralCoefficients zero = expand(ExpMonomialD{}, spec, 8);
    for (const auto& c : zero.coeffs) CHECK(c == cd{});
  }
}

TEST_CASE("expand rejects non-integrable input") {
  const LaguerreBasisSpec spec{1, q(0), q(2), 0, Branch::Positive};
  CHECK_THROWS_AS(expand(ExpMonomialD::power(q(1)), spec, 4), DivergentIntegrand);
  CHECK_THROWS_AS(expand(ExpMonomialD::term(1.0, q(0), q(1), q(2)), {1, q(0), q(1), 0, Branch::Positive}, 4),
                  BranchHypothesisViolated);
}

TEST_CASE("Gaussian with k = 0, a = 2 is supported on l = 0") {
  const LaguerreBasisSpec spec{1, q(0), q(2), 0, Branch::Positive};
  const SpectralCoefficients c = expand(ExpMonomialD::term(1.0, q(0), q(1, 2), q(2)), spec, 16);
  CHECK(std::abs(c.coeffs[0]) == doctest::Approx(std::pow(kPi, 0.25) / std::sqrt(2.0)).epsilon(1e-12));
  for (int l = 1; l < 16; ++l) CHECK(std::abs(c.coeffs[l]) < 1e-12);
}

TEST_CASE("Parseval within truncation and round trip") {
  for (const auto& spec : sample_specs()) {
    for (const auto& f : decaying_corpus(spec)) {
      const SpectralCoefficients c = expand(f, spec, 32);
      const double norm2 = inner_product(f, f, spec.measure_exponent()).real();
      CHECK(c.norm_squared() <= norm2 + 1e-8);
    }
    const ExpMonomialD f = combo(spec, {{0, 0.3}, {2, cd(0, -1)}, {5, 0.75}, {7, cd(1, 1)}});
    const SpectralCoefficients c = expand(f, spec, 16);
    CHECK(c.residual <= 1e-7);
    for (double r : {0.3, 1.0, 2.2}) CHECK(std::abs(synthesize(c, r) - f(r)) < 1e-9);
    CHECK(synthesis_norm_squared(c) == doctest::Approx(c.norm_squared()).epsilon(1e-10));
  }
}

TEST_CASE("semigroup multipliers") {
  const LaguerreBasisSpec spec{3, q(0), q(2), 0, Branch::Positive};  // lambda = 1/2
  CHECK(std::abs(semigroup_multiplier(spec, kI * kPi / 2.0, 0) - std::exp(-3.0 * kPi * kI / 4.0)) < 1e-14);
  const SpectralCoefficients c = expand(combo(spec, {{1, 1.0}, {4, 2.0}}), spec, 8);
  const SpectralCoefficients same = laguerre_semigroup(0.0, c);
  CHECK(same.coeffs == c.coeffs);
  CHECK_THROWS_AS(semigroup_multiplier(spec, cd(-0.1, 0), 0), UnboundedRegime);
  LaguerreBasisSpec minus = spec;
  minus.branch = Branch::Negative;
  CHECK_THROWS_AS(semigroup_multiplier(minus, cd(0.1, 0), 0), UnboundedRegime);
  CHECK_NOTHROW(semigroup_multiplier(minus, cd(-0.1, 3), 0));
  CHECK_NOTHROW(semigroup_multiplier(minus, cd(0, 3), 0));
}

TEST_CASE("semigroup law at the multiplier level") {
  const std::vector<cd> zs = {{0.1, 0.0}, {0.5, 1.0}, {0.0, 2.0}, {1.0, -0.7}};
  for (const auto& spec : sample_specs()) {
    const cd sign = spec.branch == Branch::Positive ? 1.0 : -1.0;
    for (const auto& z1 : zs)
      for (const auto& z2 : zs)
        for (int l = 0; l < 16; ++l) {
          const cd lhs = semigroup_multiplier(spec, sign * z1, l) * semigroup_multiplier(spec, sign * z2, l);
          const cd rhs = semigroup_multiplier(spec, sign * (z1 + z2), l);
          CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
        }
  }
}

TEST_CASE("Fourier multiplier examples") {
  for (const Rational& a : {q(1, 2), q(1), q(2), q(3)}) {
    const LaguerreBasisSpec plus{2, q(1), a, 0, Branch::Positive};
    const LaguerreBasisSpec minus{2, q(0), a, 0, Branch::Negative};
    CHECK(ft_multiplier(plus, 0) == cd(1, 0));
    CHECK(ft_multiplier(plus, 1) == cd(-1, 0));
    CHECK(ft_multiplier(minus, 1) == cd(1, 0));
    CHECK(ft_multiplier(minus, 0) == cd(-1, 0));
  }
  CHECK(unit_phase(q(1, 2)) == kI);
  CHECK(unit_phase(q(-1, 2)) == -kI);
  CHECK(std::abs(unit_phase(q(1, 3)) - std::exp(kI * kPi / 3.0)) < 1e-15);
  CHECK(std::abs(unit_phase(q(17, 3)) - std::exp(kI * kPi * 17.0 / 3.0)) < 1e-14);
}

TEST_CASE("Fourier multipliers match the phase formulas and the semigroup at i pi / 2") {
  for (const auto& g : kaharm::testing::acceptance_grid())
    for (Branch b : {Branch::Positive, Branch::Negative}) {
      const LaguerreBasisSpec spec = kaharm::testing::basis_spec(g, b);
      LaguerreBasisSpec zero = spec;
      zero.m = 0;
      if (!spec.hypothesis_holds() || !zero.hypothesis_holds()) continue;
      const double ma = g.m / to_double(g.a);
      for (int l = 0; l < 32; ++l) {
        const cd direct = b == Branch::Positive ? std::exp(-kI * kPi * (ma + l)) : -std::exp(kI * kPi * (ma + l));
        CHECK(std::abs(ft_multiplier(spec, l) - direct) < 1e-12);
        CHECK(ft_semigroup_defect(spec, l) <= 1e-12);
      }
    }
}

TEST_CASE("the transform needs the m = 0 hypothesis") {
  const LaguerreBasisSpec spec{1, q(0), q(1), 1, Branch::Positive};  // lambda = 1, lambda_0 = -1
  REQUIRE(spec.hypothesis_holds());
  const SpectralCoefficients c{spec, {1.0, 0.0}, 0.0};
  CHECK_THROWS_AS(generalized_ft(c), BranchHypothesisViolated);
}

TEST_CASE("unitarity of the transform") {
  for (const auto& spec : sample_specs()) {
    const SpectralCoefficients c = expand(decaying_corpus(spec)[1], spec, 32);
    const SpectralCoefficients t = generalized_ft(c);
    CHECK(std::abs(t.norm_squared() - c.norm_squared()) <= 1e-15 * c.norm_squared());
    CHECK(synthesis_norm_squared(t) == doctest::Approx(synthesis_norm_squared(c)).epsilon(1e-8));
    const SpectralCoefficients back = inverse_generalized_ft(t);
    for (int l = 0; l < 32; ++l) CHECK(std::abs(back.coeffs[l] - c.coeffs[l]) < 1e-15);
  }
}

TEST_CASE("ft_full") {
  const LaguerreBasisSpec s0{2, q(0), q(2), 0, Branch::Positive}, s1{2, q(0), q(2), 1, Branch::Positive};
  const SpectralCoefficients c0 = expand(combo(s0, {{0, 1.0}, {2, 0.5}}), s0, 8);
  const SpectralCoefficients c1 = expand(combo(s1, {{1, cd(0, 1)}, {3, 2.0}}), s1, 8);
  const PolynomialD one = PolynomialD::constant(2, 1.0), x1 = PolynomialD::variable(2, 0);
  SphericalDecomposition single{{{0, one, c0}}};
  CHECK(ft_full(single).sectors[0].radial.coeffs == generalized_ft(c0).coeffs);

  SphericalDecomposition d{{{0, one, c0}, {1, x1, c1}}};
  SphericalDecomposition four = d;
  for (int i = 0; i < 4; ++i) four = ft_full(four);
  for (std::size_t s = 0; s < d.sectors.size(); ++s)
    for (int l = 0; l < 8; ++l)
      CHECK(std::abs(four.sectors[s].radial.coeffs[l] - d.sectors[s].radial.coeffs[l]) < 1e-12);

  SphericalDecomposition mixed = d;
  mixed.sectors[1].radial.spec.k_index = q(1);
  CHECK_THROWS_AS(ft_full(mixed), MixedConfiguration);
  SphericalDecomposition wrong_m = d;
  wrong_m.sectors[1].m = 2;
  CHECK_THROWS_AS(ft_full(wrong_m), MixedConfiguration);
}

TEST_CASE("F_{0,2} in one dimension matches a direct Fourier integral") {
  // F(x) = e^{-x^2} + x e^{-4x^2/5}: even part in the m = 0 sector, odd part x * (e^{-4r^2/5}) in m = 1.
  const LaguerreBasisSpec s0{1, q(0), q(2), 0, Branch::Positive}, s1{1, q(0), q(2), 1, Branch::Positive};
  const ExpMonomialD even = ExpMonomialD::term(1.0, q(0), q(1), q(2));
  const ExpMonomialD odd = ExpMonomialD::term(1.0, q(1), q(4, 5), q(2));
  const SpectralCoefficients t0 = generalized_ft(expand(even, s0, 32));
  const SpectralCoefficients t1 = generalized_ft(expand(odd, s1, 32));
  auto F = [](double x) { return std::exp(-x * x) + x * std::exp(-0.8 * x * x); };
  for (double xi : {-2.1, 0.0, 0.5, 1.3, 3.1}) {
    const double r = std::abs(xi);
    const cd transformed = synthesize(t0, r) + (xi < 0 ? -1.0 : 1.0) * synthesize(t1, r);
    const int n = 40000;
    const double L = 20.0, h = 2 * L / n;
    cd direct{};
    for (int j = 0; j <= n; ++j) {
      const double x = -L + j * h;
      direct += (j == 0 || j == n ? 0.5 : 1.0) * std::exp(-kI * x * xi) * F(x);
    }
    direct *= h / std::sqrt(2 * kPi);
    CHECK(std::abs(transformed - direct) < 1e-6);
  }
}

TEST_CASE("Hilbert-Schmidt sums match the geometric series") {
  for (const auto& spec : sample_specs()) {
    const double sign = spec.branch == Branch::Positive ? 1.0 : -1.0;
    for (double x : {0.1, 0.5, 1.0}) {
      const cd z(sign * x, 0.3);
      const double sum = hilbert_schmidt_sum(spec, z), closed = hilbert_schmidt_closed_form(spec, z);
      CHECK(std::abs(sum - closed) <= 1e-10 * closed);
    }
    CHECK_THROWS_AS(hilbert_schmidt_sum(spec, cd(0, 1)), UnboundedRegime);
  }
}

TEST_CASE("kappa intertwines the semigroups and the transforms of both branches") {
  const std::vector<LaguerreBasisSpec> plus_specs = {{1, q(1, 2), q(2), 0, Branch::Positive},
                                                     {2, q(0), q(2), 1, Branch::Positive},
                                                     {3, q(1, 2), q(1), 0, Branch::Positive}};
  for (const auto& plus : plus_specs) {
    const auto corpus = decaying_corpus(plus);
    const IdentityReport report = intertwine_check_ft(plus, corpus, 32);
    for (const auto& c : report.checks) {
      INFO(c.name << " defect " << c.max_defect);
      CHECK(c.passed);
    }
  }
  // m = 0, l = 0: -(-1)^{-1} = 1 = e^0.
  const LaguerreBasisSpec p0{2, q(0), q(2), 0, Branch::Positive};
  LaguerreBasisSpec m0 = p0;
  m0.branch = Branch::Negative;
  CHECK(-1.0 / ft_multiplier(m0, 0) == ft_multiplier(p0, 0));
}
