#include "kaharm/laguerre_basis.hpp"

#include <cmath>
#include <map>
#include <tuple>

#include "kaharm/errors.hpp"
#include "kaharm/special_functions.hpp"

namespace kaharm {

Rational lambda_param(int N, const Rational& k_index, const Rational& a, int m) {
  if (a == 0) throw std::domain_error("lambda_param: a must be nonzero");
  return (Rational(N - 2) + 2 * k_index + Rational(2 * m)) / a;
}

LaguerreBasisSpec LaguerreBasisSpec::from_signed(int N, Rational k_index, const Rational& signed_a,
                                                 int m) {
  if (signed_a == 0) throw std::domain_error("deformation parameter a must be nonzero");
  LaguerreBasisSpec spec;
  spec.N = N;
  spec.k_index = std::move(k_index);
  spec.a = signed_a > 0 ? signed_a : Rational(-signed_a);
  spec.m = m;
  spec.branch = signed_a > 0 ? Branch::Positive : Branch::Negative;
  return spec;
}

bool LaguerreBasisSpec::hypothesis_holds() const {
  if (a <= 0 || m < 0 || N < 1) return false;
  return branch == Branch::Positive ? lambda() > -1 : lambda() < 1;
}

void LaguerreBasisSpec::validate() const {
  if (a <= 0) throw BranchHypothesisViolated("basis spec needs a > 0 (sign goes in the branch)");
  if (m < 0 || N < 1) throw BranchHypothesisViolated("basis spec needs N >= 1 and m >= 0");
  if (!hypothesis_holds()) {
    throw BranchHypothesisViolated(std::string("lambda = ") + format_rational(lambda()) +
                                   (branch == Branch::Positive ? " must exceed -1" : " must be below 1") +
                                   " on the " + branch_name(branch) + " branch (m = " + std::to_string(m) + ")");
  }
}

ExpMonomialQ basis_rational_part(const LaguerreBasisSpec& spec, int l) {
  spec.validate();
  if (l < 0) throw std::domain_error("basis index must be nonnegative");
  const Rational lambda = spec.laguerre_parameter();
  const bool positive = spec.branch == Branch::Positive;
  const Rational base = positive ? Rational(spec.m) : Rational(-(spec.shift() + spec.m));
  const Rational step = positive ? spec.a : Rational(-spec.a);
  const Rational q = 1 / spec.a;
  const Rational t_scale = 2 / spec.a;

  ExpMonomialQ f;
  for (int j = 0; j <= l; ++j) {
    Rational c = (j % 2 == 0) ? Rational(1) : Rational(-1);
    for (int i = 1; i <= j; ++i) c /= i;
    for (int i = 1; i <= l - j; ++i) c /= i;
    for (int i = j + 1; i <= l; ++i) c *= lambda + i;
    for (int i = 0; i < j; ++i) c *= t_scale;
    f.add_term(GaussianRational(c), base + step * j, q, step);
  }
  return f;
}

double basis_normalization(const LaguerreBasisSpec& spec, int l) {
  spec.validate();
  const double lambda = to_double(spec.laguerre_parameter());
  const double a = to_double(spec.a);
  const double log_n2 =
      (lambda + 1.0) * std::log(2.0) + log_gamma(l + 1.0) - lambda * std::log(a) - log_gamma(lambda + l + 1.0);
  return std::exp(0.5 * log_n2);
}

ExpMonomialD basis_function(const LaguerreBasisSpec& spec, int l) {
  ExpMonomialD f = basis_rational_part(spec, l).convert<std::complex<double>>();
  f *= std::complex<double>(basis_normalization(spec, l), 0.0);
  return f;
}

double basis_value(const LaguerreBasisSpec& spec, int l, double r) {
  const double lambda = to_double(spec.laguerre_parameter());
  const double a = to_double(spec.a);
  const double n = basis_normalization(spec, l);
  if (spec.branch == Branch::Positive) {
    const double t = (2.0 / a) * std::pow(r, a);
    return n * std::pow(r, spec.m) * laguerre_poly(lambda, l, t) * std::exp(-0.5 * t);
  }
  const double t = (2.0 / a) * std::pow(r, -a);
  const double power = -to_double(spec.shift() + spec.m);
  return n * std::pow(r, power) * laguerre_poly(lambda, l, t) * std::exp(-0.5 * t);
}

namespace {

// int r^p e^{-Q r^s} dr with nu = (p+1)/s; checks integrability.
Rational moment_order(const RadialKey& key) {
  if (!key.has_decay()) {
    throw DivergentIntegrand("integrand term r^" + format_rational(key.gamma) + " has no exponential decay");
  }
  const Rational nu = (key.gamma + 1) / key.s;
  if (nu <= 0) {
    throw DivergentIntegrand("integrand term r^" + format_rational(key.gamma) + " exp(-" + format_rational(key.q) +
                             " r^" + format_rational(key.s) + ") is not integrable at the slow end");
  }
  return nu;
}

}  // namespace

std::complex<double> inner_product(const ExpMonomialD& f, const ExpMonomialD& g, const Rational& d,
                                   int nodes) {
  const ExpMonomialD product = (f * g.conj()).times_power(d);

  // (Q, s, fractional part of mu) -> list of (mu, scaled coefficient).
  using GroupKey = std::tuple<Rational, Rational, Rational>;
  std::map<GroupKey, std::vector<std::pair<Rational, std::complex<double>>>> groups;
  for (const auto& [key, c] : product.terms()) {
    const Rational exponent = moment_order(key);
    const Rational mu = exponent - 1;
    const Rational frac = mu - Rational(floor_to_int(mu));
    const double factor = std::pow(to_double(key.q), -to_double(exponent)) / std::abs(to_double(key.s));
    groups[{key.q, key.s, frac}].emplace_back(mu, c * factor);
  }

  std::complex<double> total{};
  for (const auto& [gk, terms] : groups) {
    Rational alpha = terms.front().first;
    for (const auto& [mu, c] : terms)
      if (mu < alpha) alpha = mu;
    const auto& rule = cached_gauss_laguerre(nodes, to_double(alpha));
    std::vector<std::pair<int, std::complex<double>>> poly;
    for (const auto& [mu, c] : terms) poly.emplace_back(floor_to_int(mu - alpha), c);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      if (rule.weights[i] == 0.0) continue;
      const double t = rule.nodes[i];
      std::complex<double> v{};
      for (const auto& [power, c] : poly) v += c * std::pow(t, power);
      total += rule.weights[i] * v;
    }
  }
  return total;
}

std::complex<double> inner_product(const ExpMonomialQ& f, const ExpMonomialQ& g, const Rational& d) {
  const ExpMonomialQ product = (f * g.conj()).times_power(d);
  using GroupKey = std::tuple<Rational, Rational, Rational>;
  std::map<GroupKey, std::vector<std::pair<Rational, GaussianRational>>> groups;
  for (const auto& [key, c] : product.terms()) {
    const Rational nu = moment_order(key);
    groups[{key.q, key.s, nu - Rational(floor_to_int(nu))}].emplace_back(nu, c);
  }
  std::complex<double> total{};
  for (const auto& [gk, terms] : groups) {
    const auto& [Q, s, frac] = gk;
    Rational nu0 = terms.front().first;
    for (const auto& t : terms)
      if (t.first < nu0) nu0 = t.first;
    GaussianRational sum(0);
    for (const auto& [nu, c] : terms) {
      Rational w(1);
      for (Rational x = nu0; x < nu; x += 1) w *= x / Q;
      sum += c * GaussianRational(w);
    }
    const double nu0d = to_double(nu0);
    const double factor = std::exp(log_gamma(nu0d) - nu0d * std::log(to_double(Q))) / std::abs(to_double(s));
    total += factor * sum.to_complex();
  }
  return total;
}

std::vector<std::vector<double>> gram_matrix(const LaguerreBasisSpec& spec, int L) {
  std::vector<ExpMonomialQ> parts;
  std::vector<double> norms;
  for (int l = 0; l < L; ++l) {
    parts.push_back(basis_rational_part(spec, l));
    norms.push_back(basis_normalization(spec, l));
  }
  const Rational d = spec.measure_exponent();
  std::vector<std::vector<double>> gram(L, std::vector<double>(L));
  for (int i = 0; i < L; ++i)
    for (int j = i; j < L; ++j) {
      gram[i][j] = gram[j][i] = norms[i] * norms[j] * inner_product(parts[i], parts[j], d).real();
    }
  return gram;
}

BranchQuadrature::BranchQuadrature(const LaguerreBasisSpec& spec, int nodes) : spec_(spec) {
  spec_.validate();
  const double lambda = to_double(spec_.laguerre_parameter());
  const double a = to_double(spec_.a);
  const double d = to_double(spec_.measure_exponent());
  const double sign = spec_.branch == Branch::Positive ? 1.0 : -1.0;
  const auto& rule = cached_gauss_laguerre(nodes, lambda);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = rule.nodes[i];
    // t = (2/a) r^{+-a}  =>  r = (a t / 2)^{+-1/a},  |dr/dt| = r / (a t)
    const double log_r = sign * std::log(0.5 * a * t) / a;
    radii_.push_back(std::exp(log_r));
    t_.push_back(t);
    log_weights_.push_back(rule.log_weights[i] + t - lambda * std::log(t) + (d + 1.0) * log_r -
                           std::log(a * t));
  }
}

std::vector<std::vector<double>> BranchQuadrature::basis_table(int L) const {
  const double lambda = to_double(spec_.laguerre_parameter());
  const double power = spec_.branch == Branch::Positive ? double(spec_.m) : -to_double(spec_.shift() + spec_.m);
  std::vector<std::vector<double>> table(static_cast<std::size_t>(std::max(L, 0)),
                                         std::vector<double>(radii_.size()));
  std::vector<double> norms;
  for (int l = 0; l < L; ++l) norms.push_back(basis_normalization(spec_, l));
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    const double t = t_[i];
    const double envelope = std::pow(radii_[i], power) * std::exp(-0.5 * t);
    double prev = 0.0, cur = 1.0;
    for (int l = 0; l < L; ++l) {
      table[static_cast<std::size_t>(l)][i] = norms[static_cast<std::size_t>(l)] * cur * envelope;
      const double next = ((2.0 * l + 1.0 + lambda - t) * cur - (l + lambda) * prev) / (l + 1.0);
      prev = cur;
      cur = next;
    }
  }
  return table;
}

}  // namespace kaharm
