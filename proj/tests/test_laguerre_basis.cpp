#include <chrono>
#include <cmath>

#include "doctest.h"
#include "kaharm/errors.hpp"
#include "kaharm/kappa.hpp"
#include "kaharm/laguerre_basis.hpp"
#include "kaharm/special_functions.hpp"
#include "test_support.hpp"

using namespace kaharm;
using kaharm::testing::q;

namespace {

// int_0^inf r^p e^{-Q r^s} dr = Gamma((p+1)/s) / (|s| Q^{(p+1)/s}), valid for either sign of s.
double gamma_integral(double p, double Q, double s) {
  const double mu = (p + 1) / s;
  return std::tgamma(mu) / (std::abs(s) * std::pow(Q, mu));
}

// Closed-form <f, g> in r^d dr for terms with a common decay exponent s.
std::complex<double> closed_form_inner(const ExpMonomialD& f, const ExpMonomialD& g, double d) {
  std::complex<double> sum{};
  for (const auto& [kf, cf] : f.terms())
    for (const auto& [kg, cg] : g.terms()) {
      const double s = kf.has_decay() ? to_double(kf.s) : to_double(kg.s);
      const double Q = to_double(kf.q + kg.q);
      sum += cf * std::conj(cg) * gamma_integral(to_double(kf.gamma + kg.gamma) + d, Q, s);
    }
  return sum;
}

}  // namespace

TEST_CASE("gamma function") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
  for (double x : {0.1, 1.7, 3.3, 10.5, 25.0, -0.5, -2.5}) {
    CHECK(gamma_fn(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-13));
  }
  for (double x : {0.3, 4.0, 60.0}) CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
  CHECK_THROWS_AS(gamma_fn(0.0), GammaPole);
  CHECK_THROWS_AS(gamma_fn(-3.0), GammaPole);
}

TEST_CASE("laguerre polynomial examples") {
  CHECK(laguerre_poly(0.7, 0, 3.0) == 1.0);
  CHECK(laguerre_poly(0.5, 1, 2.0) == doctest::Approx(-0.5));
  CHECK(laguerre_poly(0.0, 2, 1.0) == doctest::Approx(-0.5));
  CHECK(laguerre_poly_sum(0.0, 2, 1.0) == doctest::Approx(-0.5));
  CHECK_THROWS_AS(laguerre_poly(-2.0, 3, 1.0), GammaPole);
  CHECK_THROWS_AS(laguerre_poly_sum(-1.0, 1, 1.0), GammaPole);
}

TEST_CASE("recurrence and finite sum against exact rational summation for l <= 20") {
  // Exact value of the finite sum, plus the sum of |terms| which bounds the cancellation in floating point.
  auto exact_sum = [](const Rational& lambda, int l, const Rational& t) {
    Rational sum(0), magnitude(0);
    for (int j = 0; j <= l; ++j) {
      Rational c(j % 2 == 0 ? 1 : -1);
      for (int i = 1; i <= j; ++i) c /= i;
      for (int i = 1; i <= l - j; ++i) c /= i;
      for (int i = j + 1; i <= l; ++i) c *= lambda + i;
      Rational term = c;
      for (int i = 0; i < j; ++i) term *= t;
      sum += term;
      magnitude += abs(term);
    }
    return std::pair{to_double(sum), to_double(magnitude)};
  };
  for (const Rational& lambda : {q(-1, 2), q(0), q(1, 2), q(2), q(29, 4)})
    for (int l = 0; l <= 20; ++l)
      for (const Rational& t : {q(1, 10), q(1), q(3), q(9)}) {
        const auto [exact, magnitude] = exact_sum(lambda, l, t);
        const double rec = laguerre_poly(to_double(lambda), l, to_double(t));
        const double fin = laguerre_poly_sum(to_double(lambda), l, to_double(t));
        INFO("lambda=" << lambda << " l=" << l << " t=" << t);
        CHECK(std::abs(rec - exact) <= 1e-12 * std::max(1.0, std::abs(exact)));
        CHECK(std::abs(fin - exact) <= 1e-15 * (l + 1) * std::max(1.0, magnitude));
      }
}

TEST_CASE("gauss-laguerre integrates moments exactly") {
  for (double alpha : {-0.5, 0.0, 1.5, 4.0}) {
    const auto& rule = cached_gauss_laguerre(128, alpha);
    REQUIRE(rule.nodes.size() == 128);
    for (int j = 0; j <= 12; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += std::exp(rule.log_weights[i]) * std::pow(rule.nodes[i], j);
      CHECK(s == doctest::Approx(std::tgamma(alpha + j + 1)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(gauss_laguerre(16, -1.0), DivergentIntegrand);
}

TEST_CASE("lambda_param examples") {
  CHECK(lambda_param(3, q(0), q(2), 0) == q(1, 2));
  CHECK(lambda_param(1, q(1, 2), q(1), 0) == q(0));
  CHECK(lambda_param(3, q(0), q(-2), 0) == q(-1, 2));
  CHECK_THROWS(lambda_param(1, q(0), q(0), 0));
  const LaguerreBasisSpec minus{3, q(0), q(2), 0, Branch::Negative};
  CHECK(minus.lambda() == q(-1, 2));
  CHECK(minus.measure_exponent() == q(-2));
}

TEST_CASE("branch hypotheses") {
  const LaguerreBasisSpec bad{1, q(0), q(2), 0, Branch::Positive};  // lambda = -1/2 ok
  CHECK(bad.hypothesis_holds());
  const LaguerreBasisSpec edge{1, q(0), q(1), 0, Branch::Positive};  // lambda = -1
  CHECK_FALSE(edge.hypothesis_holds());
  CHECK_THROWS_AS(edge.validate(), BranchHypothesisViolated);
  CHECK_THROWS_AS(basis_function(edge, 0), BranchHypothesisViolated);
  const LaguerreBasisSpec edge_minus{1, q(0), q(1), 0, Branch::Negative};  // lambda_- = 1
  CHECK_THROWS_AS(edge_minus.validate(), BranchHypothesisViolated);
}

TEST_CASE("normalization of the N=1 Gaussian") {
  const LaguerreBasisSpec spec{1, q(0), q(2), 0, Branch::Positive};
  const ExpMonomialD f = basis_function(spec, 0);
  const double c = std::sqrt(2.0 / std::sqrt(M_PI));
  for (double r : {0.3, 1.0, 2.0}) CHECK(f(r).real() == doctest::Approx(c * std::exp(-r * r / 2)).epsilon(1e-14));
  CHECK(std::abs(inner_product(f, f, spec.measure_exponent()) - 1.0) < 1e-12);
}

TEST_CASE("inner_product examples and closed-form oracle") {
  const ExpMonomialD e = ExpMonomialD::term(1.0, q(0), q(1, 2), q(1));
  CHECK(std::abs(inner_product(e, e, q(0)) - 1.0) < 1e-13);
  for (const auto& g : kaharm::testing::acceptance_grid()) {
    for (Branch b : {Branch::Positive, Branch::Negative}) {
      const LaguerreBasisSpec spec = kaharm::testing::basis_spec(g, b);
      if (!spec.hypothesis_holds()) continue;
      const double d = to_double(spec.measure_exponent());
      for (int l : {0, 1, 3}) {
        const ExpMonomialD f = basis_function(spec, l);
        const ExpMonomialD h = basis_function(spec, 2);
        const std::complex<double> oracle = closed_form_inner(f, h, d);
        CHECK(std::abs(inner_product(f, h, spec.measure_exponent()) - oracle) < 1e-10);
      }
    }
  }
}

TEST_CASE("inner_product rejects divergent integrands") {
  const ExpMonomialD p = ExpMonomialD::power(q(1));
  CHECK_THROWS_AS(inner_product(p, p, q(0)), DivergentIntegrand);
  const ExpMonomialD e = ExpMonomialD::term(1.0, q(0), q(1), q(1));
  CHECK_THROWS_AS(inner_product(e, e, q(-1)), DivergentIntegrand);
  CHECK_NOTHROW(inner_product(e, e, q(-1, 2)));
}

TEST_CASE("8x8 Gram matrices are the identity on the acceptance grid") {
  const auto start = std::chrono::steady_clock::now();
  int configs = 0;
  for (const auto& g : kaharm::testing::acceptance_grid())
    for (Branch b : {Branch::Positive, Branch::Negative}) {
      const LaguerreBasisSpec spec = kaharm::testing::basis_spec(g, b);
      if (!spec.hypothesis_holds()) continue;
      ++configs;
      const auto gram = gram_matrix(spec, 8);
      // Second route: branch quadrature with the recurrence, no expansion.
      const BranchQuadrature quad(spec, 32);
      const auto table = quad.basis_table(8);
      double worst = 0.0, worst_quad = 0.0;
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
          const double id = i == j ? 1.0 : 0.0;
          worst = std::max(worst, std::abs(gram[i][j] - id));
          double s = 0.0;
          for (std::size_t n = 0; n < quad.radii().size(); ++n)
            s += std::exp(quad.log_weights()[n]) * table[i][n] * table[j][n];
          worst_quad = std::max(worst_quad, std::abs(s - id));
        }
      INFO("N=" << g.N << " k=" << g.k_index << " a=" << g.a << " m=" << g.m << " " << branch_name(b));
      CHECK(worst <= 1e-8);
      CHECK(worst_quad <= 1e-8);
    }
  CHECK(configs > 100);
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(30));
}

TEST_CASE("exact and floating inner products agree where the expansion is well conditioned") {
  const LaguerreBasisSpec spec{2, q(1, 2), q(1), 1, Branch::Positive};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const auto exact = basis_normalization(spec, i) * basis_normalization(spec, j) *
                         inner_product(basis_rational_part(spec, i), basis_rational_part(spec, j),
                                       spec.measure_exponent());
      const auto fp = inner_product(basis_function(spec, i), basis_function(spec, j), spec.measure_exponent());
      CHECK(std::abs(exact - fp) < 1e-11);
    }
  CHECK_THROWS_AS(inner_product(ExpMonomialQ::power(q(1)), ExpMonomialQ::power(q(1)), q(0)), DivergentIntegrand);
}

TEST_CASE("stable evaluation matches the expanded form") {
  for (const auto& g : kaharm::testing::acceptance_grid())
    for (Branch b : {Branch::Positive, Branch::Negative}) {
      const LaguerreBasisSpec spec = kaharm::testing::basis_spec(g, b);
      if (!spec.hypothesis_holds()) continue;
      for (int l : {0, 4, 7}) {
        const ExpMonomialD f = basis_function(spec, l);
        for (double r : {0.5, 1.0, 2.0}) {
          CHECK(std::abs(basis_value(spec, l, r) - f(r).real()) <= 1e-10 * std::max(1.0, std::abs(f(r))));
        }
      }
    }
}

TEST_CASE("the -a basis is the kappa image of the +a basis") {
  for (const auto& g : kaharm::testing::acceptance_grid()) {
    const LaguerreBasisSpec plus = kaharm::testing::basis_spec(g, Branch::Positive);
    const LaguerreBasisSpec minus = kaharm::testing::basis_spec(g, Branch::Negative);
    if (!plus.hypothesis_holds()) continue;
    const KappaParams kappa = KappaParams::intertwiner(g.N, g.k_index);
    for (int l : {0, 2, 5}) {
      const ExpMonomialD image = kappa_radial(kappa, basis_function(plus, l));
      const ExpMonomialD target = basis_function(minus, l);
      for (double r : {0.5, 1.0, 2.0}) CHECK(std::abs(image(r) - target(r)) <= 1e-12 * std::max(1.0, std::abs(target(r))));
    }
  }
}

TEST_CASE("leading behaviour of the basis functions") {
  for (const auto& g : kaharm::testing::acceptance_grid()) {
    for (Branch b : {Branch::Positive, Branch::Negative}) {
      const LaguerreBasisSpec spec = kaharm::testing::basis_spec(g, b);
      if (!spec.hypothesis_holds()) continue;
      const ExpMonomialQ f = basis_rational_part(spec, 3);
      for (const auto& [key, c] : f.terms()) {
        CHECK(key.q == Rational(1) / g.a);
        if (b == Branch::Positive) {
          CHECK(key.s == g.a);
          CHECK(key.gamma >= g.m);
        } else {
          CHECK(key.s == -g.a);
          CHECK(key.gamma <= -(spec.shift() + g.m));
        }
      }
      const RadialKey extreme = b == Branch::Positive ? f.terms().begin()->first : f.terms().rbegin()->first;
      CHECK(extreme.gamma == (b == Branch::Positive ? Rational(g.m) : Rational(-(spec.shift() + g.m))));
    }
  }
}

TEST_CASE("branch quadrature integrates basis products") {
  const LaguerreBasisSpec spec{2, q(1, 2), q(1), 1, Branch::Negative};
  const BranchQuadrature quad(spec, 64);
  const auto table = quad.basis_table(10);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      double s = 0.0;
      for (std::size_t n = 0; n < quad.radii().size(); ++n) s += std::exp(quad.log_weights()[n]) * table[i][n] * table[j][n];
      CHECK(std::abs(s - (i == j ? 1.0 : 0.0)) < 1e-11);
    }
}
