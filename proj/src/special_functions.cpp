#include "kaharm/special_functions.hpp"

#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "kaharm/errors.hpp"

namespace kaharm {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Lanczos series A_g(z) for z = x - 1 >= -1/2.
double lanczos_series(double z) {
  double a = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) a += kLanczosCoefficients[i] / (z + static_cast<double>(i));
  return a;
}

}  // namespace

double gamma_fn(double x) {
  if (is_nonpositive_integer(x)) throw GammaPole("Gamma has a pole at " + std::to_string(x));
  if (x < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_fn(1.0 - x));
  }
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * lanczos_series(z);
}

double log_gamma(double x) {
  if (x <= 0.0) throw GammaPole("log_gamma needs a positive argument");
  if (x < 0.5) return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_series(z));
}

namespace {

void check_laguerre_poles(double lambda, int l) {
  if (l < 0) throw std::domain_error("Laguerre degree must be nonnegative");
  for (int j = 0; j <= l; ++j) {
    if (is_nonpositive_integer(lambda + j + 1)) {
      throw GammaPole("Laguerre coefficient Gamma(lambda + " + std::to_string(j + 1) + ") has a pole");
    }
  }
}

}  // namespace

double laguerre_poly(double lambda, int l, double t) {
  check_laguerre_poles(lambda, l);
  if (l == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + lambda - t;
  for (int n = 1; n < l; ++n) {
    const double next = ((2.0 * n + 1.0 + lambda - t) * cur - (n + lambda) * prev) / (n + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre_poly_sum(double lambda, int l, double t) {
  check_laguerre_poles(lambda, l);
  double sum = 0.0;
  for (int j = 0; j <= l; ++j) {
    double c = (j % 2 == 0) ? 1.0 : -1.0;
    for (int i = 1; i <= j; ++i) c /= i;
    for (int i = 1; i <= l - j; ++i) c /= i;
    for (int i = j + 1; i <= l; ++i) c *= lambda + i;
    sum += c * std::pow(t, j);
  }
  return sum;
}

GaussLaguerreRule gauss_laguerre(int n, double alpha) {
  if (n < 1) throw std::domain_error("gauss_laguerre needs at least one node");
  if (alpha <= -1.0) throw DivergentIntegrand("Gauss-Laguerre parameter must exceed -1");

  // Jacobi matrix of the monic recurrence p_{j+1} = (t - a_j) p_j - b_j^2 p_{j-1}.
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 1));
  for (int j = 0; j < n; ++j) diag(j) = 2.0 * j + alpha + 1.0;
  for (int j = 1; j < n; ++j) sub(j - 1) = std::sqrt(j * (j + alpha));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(std::max(n - 1, 0)), Eigen::EigenvaluesOnly);

  GaussLaguerreRule rule;
  rule.alpha = alpha;
  rule.nodes.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);

  constexpr double kBig = 1e100;
  // Newton polish on p_n using the monic recurrence; the ratio p/p' is scale free.
  for (double& x : rule.nodes) {
    for (int iter = 0; iter < 3; ++iter) {
      double p0 = 1.0, p1 = x - (alpha + 1.0);
      double d0 = 0.0, d1 = 1.0;
      for (int j = 1; j < n; ++j) {
        const double a = 2.0 * j + alpha + 1.0;
        const double b2 = j * (j + alpha);
        const double p2 = (x - a) * p1 - b2 * p0;
        const double d2 = p1 + (x - a) * d1 - b2 * d0;
        p0 = p1;
        p1 = p2;
        d0 = d1;
        d1 = d2;
        if (std::abs(p1) > kBig || std::abs(d1) > kBig) {
          p0 /= kBig;
          p1 /= kBig;
          d0 /= kBig;
          d1 /= kBig;
        }
      }
      if (n == 1) {
        p1 = x - (alpha + 1.0);
        d1 = 1.0;
      }
      if (d1 == 0.0) break;
      const double step = p1 / d1;
      x -= step;
      if (std::abs(step) <= 1e-16 * std::abs(x)) break;
    }
  }

  // Christoffel numbers 1 / sum_j phat_j(x)^2 with orthonormal phat_j.
  const double log_mu0 = log_gamma(alpha + 1.0);
  for (double x : rule.nodes) {
    double scale_log = 0.0;  // true values = stored * exp(scale_log)
    double prev = 0.0;
    double cur = std::exp(-0.5 * log_mu0);
    double sum = cur * cur;
    double beta_prev = 0.0;
    for (int j = 0; j + 1 < n; ++j) {
      const double a = 2.0 * j + alpha + 1.0;
      const double beta_next = std::sqrt((j + 1.0) * (j + 1.0 + alpha));
      const double next = ((x - a) * cur - beta_prev * prev) / beta_next;
      prev = cur;
      cur = next;
      beta_prev = beta_next;
      sum += cur * cur;
      if (std::abs(cur) > kBig) {
        prev /= kBig;
        cur /= kBig;
        sum /= kBig * kBig;
        scale_log += 2.0 * std::log(kBig);
      }
    }
    const double log_w = -(std::log(sum) + scale_log);
    rule.log_weights.push_back(log_w);
    rule.weights.push_back(std::exp(log_w));
  }
  return rule;
}

const GaussLaguerreRule& cached_gauss_laguerre(int n, double alpha) {
  static std::mutex mutex;
  static std::map<std::pair<int, double>, std::unique_ptr<GaussLaguerreRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, alpha}];
  if (!slot) slot = std::make_unique<GaussLaguerreRule>(gauss_laguerre(n, alpha));
  return *slot;
}

}  // namespace kaharm
