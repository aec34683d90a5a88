// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "kaharm/cli.hpp"
#include "kaharm/dunkl.hpp"
#include "kaharm/kappa.hpp"
#include "kaharm/laguerre_basis.hpp"
#include "kaharm/polar.hpp"
#include "kaharm/sl2.hpp"
#include "kaharm/spectral.hpp"
#include "test_support.hpp"

using namespace kaharm;
using kaharm::testing::acceptance_grid;
using kaharm::testing::basis_spec;
using kaharm::testing::q;
using cd = std::complex<double>;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

/// Grid points (with branch) satisfying the branch hypothesis.
template <typename Fn>
int for_each_valid(Fn&& fn) {
  int count = 0;
  for (const auto& g : acceptance_grid())
    for (Branch b : {Branch::Positive, Branch::Negative}) {
      const LaguerreBasisSpec spec = basis_spec(g, b);
      if (!spec.hypothesis_holds()) continue;
      ++count;
      fn(spec);
    }
  return count;
}

Outcome orthonormality() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  const int configs = for_each_valid([&](const LaguerreBasisSpec& spec) {
    const auto gram = gram_matrix(spec, 8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) worst = std::max(worst, std::abs(gram[i][j] - (i == j ? 1.0 : 0.0)));
  });
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char t[32];
  std::snprintf(t, sizeof t, "%.2f", seconds);
  return {worst <= 1e-8 && seconds < 30.0,
          std::to_string(configs) + " configurations, max |G - I| = " + sci(worst) + ", " + t + " s"};
}

Outcome sl2_relations() {
  const auto corpus = radial_corpus();
  bool ok = true;
  double worst = 0.0;
  const int configs = for_each_valid([&](const LaguerreBasisSpec& spec) {
    const IdentityReport r = verify_sl2_relations(RadialOperatorSpec::from_basis(spec), corpus);
    ok = ok && r.passed() && r.max_defect() == 0.0;
    worst = std::max(worst, r.max_defect());
  });
  return {ok, std::to_string(configs) + " configurations x " + std::to_string(corpus.size()) +
                  " functions, max bracket defect " + sci(worst)};
}

Outcome ladder() {
  bool ok = true;
  double worst = 0.0;
  const int configs = for_each_valid([&](const LaguerreBasisSpec& spec) {
    for (int l = 0; l <= 7; ++l) {
      const IdentityReport r = ladder_check(spec, l);
      ok = ok && r.passed();
      worst = std::max(worst, r.max_defect());
    }
  });
  return {ok, std::to_string(configs) + " configurations, l <= 7, max error " + sci(worst) +
                  " (relative <= 1e-10, annihilation <= 1e-12)"};
}

std::vector<PolarSum> polar_corpus(int n) {
  std::mt19937 rng(static_cast<unsigned>(40 + n));
  const auto radial = radial_corpus();
  std::vector<PolarSum> out;
  for (std::size_t i = 0; i < radial.size(); i += 4) {
    PolarSum s(n);
    s.add(kaharm::testing::random_polynomial(rng, n, 3, 3), radial[i]);
    s.add(kaharm::testing::random_homogeneous(rng, n, 2, 2), radial[(i + 1) % radial.size()]);
    out.push_back(s);
  }
  return out;
}

Outcome intertwining() {
  const auto corpus = radial_corpus();
  bool radial_ok = true;
  for (const auto& g : acceptance_grid()) {
    const RadialOperatorSpec spec{g.N, g.k_index, g.a, g.m};
    radial_ok = radial_ok && radial_intertwining_check(spec, corpus).passed();
  }
  bool full_ok = true;
  const std::vector<MultiplicityFunction> ks = {
      kaharm::testing::uniform_k("A1", q(1, 2)),
      MultiplicityFunction::from_orbits(preset_root_system("I2(4)"), {{{1, 0}, q(1, 2)}, {{1, 1}, q(1, 3)}}),
      kaharm::testing::uniform_k("A1^3", q(1))};
  for (const auto& k : ks)
    for (const Rational& a : {q(1, 2), q(1), q(2)}) {
      const FullIntertwiningReport r = full_intertwining_check(k, a, polar_corpus(k.dimension()));
      full_ok = full_ok && r.relations.passed();
    }
  double unitarity = 0.0;
  bool unitary_ok = true;
  for (const auto& g : acceptance_grid()) {
    const LaguerreBasisSpec plus = basis_spec(g, Branch::Positive);
    if (!plus.hypothesis_holds()) continue;
    const KappaParams kappa = KappaParams::intertwiner(g.N, g.k_index);
    for (int l = 0; l < 4; ++l) {
      const UnitarityReport r = kappa_unitarity_check(kappa, basis_function(plus, l), plus.measure_exponent());
      unitary_ok = unitary_ok && r.relative_error <= 1e-8;
      unitarity = std::max(unitarity, r.relative_error);
    }
  }
  return {radial_ok && full_ok && unitary_ok,
          std::string("radial relations and kappa^2 ") + (radial_ok ? "exact" : "FAILED") + ", R^N relations " +
              (full_ok ? "exact" : "FAILED") + ", unitarity max relative error " + sci(unitarity)};
}

Outcome spectra() {
  bool ok = true;
  int count = 0;
  for (int n : {1, 2, 3})
    for (const Rational& k : {q(0), q(1, 2), q(1)})
      for (const Rational& a : {q(1, 2), q(1), q(2)})
        for (int m = 0; m <= 5; ++m)
          for (Branch b : {Branch::Positive, Branch::Negative}) {
            const LaguerreBasisSpec spec{n, k, a, m, b};
            if (!spec.hypothesis_holds()) continue;
            for (int l = 0; l <= 5; ++l) {
              const auto mu = exact_compact_eigenvalue(spec, l);
              const Rational lambda = spec.lambda();
              const Rational expected = b == Branch::Positive ? Rational(lambda + 2 * l + 1) : Rational(lambda - 2 * l - 1);
              ok = ok && mu && *mu == expected;
              ++count;
            }
          }
  // N = 1: the sectors m = 0, 1 give {(2<k> -+ 1)/a + 2l + 1}.
  bool n1 = true;
  for (const Rational& k : {q(0), q(1, 2), q(1)})
    for (const Rational& a : {q(1, 2), q(1), q(2)}) {
      std::set<Rational> got, expected;
      bool valid = true;
      for (int m : {0, 1}) {
        const LaguerreBasisSpec spec{1, k, a, m, Branch::Positive};
        if (!spec.hypothesis_holds()) valid = false;
      }
      if (!valid) continue;
      for (int l = 0; l <= 5; ++l) {
        for (int m : {0, 1}) got.insert(*exact_compact_eigenvalue({1, k, a, m, Branch::Positive}, l));
        for (int sign : {-1, 1}) expected.insert((2 * k + sign) / a + 2 * l + 1);
      }
      n1 = n1 && got == expected;
    }
  return {ok && n1, std::to_string(count) + " eigenvalues exact for m, l <= 5; N = 1 set " + (n1 ? "matches" : "DIFFERS")};
}

std::vector<ExpMonomialD> decaying_corpus(const LaguerreBasisSpec& spec) {
  const Rational s = spec.branch == Branch::Positive ? Rational(2) : Rational(-2);
  const Rational g = spec.branch == Branch::Positive ? Rational(spec.m) : Rational(-(spec.shift() + spec.m));
  std::vector<ExpMonomialD> out;
  out.push_back(ExpMonomialD::term(1.0, g, q(1), s));
  out.push_back(ExpMonomialD::term(cd(0.5, -1.0), g + s, q(3, 4), s));
  return out;
}

Outcome semigroup_and_transform() {
  const std::vector<cd> zs = {{0.0, 0.0}, {0.3, 0.0}, {0.2, 1.0}, {0.0, 1.5}, {1.0, -0.7}};
  double group = 0.0, norm = 0.0, phase = 0.0, functions = 0.0;
  bool functions_ok = true;
  int transformed = 0;
  for_each_valid([&](const LaguerreBasisSpec& spec) {
    const double sign = spec.branch == Branch::Positive ? 1.0 : -1.0;
    for (int l = 0; l < 32; ++l)
      for (const cd& z1 : zs)
        for (const cd& z2 : zs) {
          const cd lhs = semigroup_multiplier(spec, sign * z1, l) * semigroup_multiplier(spec, sign * z2, l);
          const cd rhs = semigroup_multiplier(spec, sign * (z1 + z2), l);
          group = std::max(group, std::abs(lhs - rhs) / std::abs(rhs));
        }
    LaguerreBasisSpec zero = spec;
    zero.m = 0;
    if (!zero.hypothesis_holds()) return;
    ++transformed;
    for (const auto& f : decaying_corpus(spec)) {
      const SpectralCoefficients c = expand(f, spec, 32);
      norm = std::max(norm, std::abs(generalized_ft(c).norm_squared() - c.norm_squared()) / c.norm_squared());
    }
    if (spec.branch == Branch::Positive) {
      const IdentityReport r = intertwine_check_ft(spec, decaying_corpus(spec), 32);
      phase = std::max({phase, r.checks[0].max_defect, r.checks[1].max_defect});
      functions = std::max({functions, r.checks[2].max_defect, r.checks[3].max_defect});
      functions_ok = functions_ok && r.checks[2].passed && r.checks[3].passed;
    }
  });
  return {group <= 1e-12 && norm <= 1e-12 && phase <= 1e-12 && functions_ok,
          "Lambda law " + sci(group) + ", F norm defect " + sci(norm) + ", kappa identity phase error " + sci(phase) +
              ", kappa identity function-level error " + sci(functions) + " (" + std::to_string(transformed) +
              " transform configurations)"};
}

Outcome classical_reductions() {
  std::mt19937 rng(2024);
  bool laplacian = true;
  for (const char* preset : {"A1", "A1xA1", "I2(4)", "A1^3"}) {
    const MultiplicityFunction zero = kaharm::testing::uniform_k(preset, q(0));
    const DunklData<Rational> data(zero);
    for (int i = 0; i < 50; ++i) {
      const PolynomialQ p = kaharm::testing::random_polynomial(rng, zero.dimension(), 5, 5);
      laplacian = laplacian && dunkl_laplacian(data, p) == classical_laplacian(p);
    }
  }

  // F(x) = e^{-x^2} + x e^{-4x^2/5}: even part in m = 0, odd part x e^{-4r^2/5} in m = 1.
  const LaguerreBasisSpec s0{1, q(0), q(2), 0, Branch::Positive}, s1{1, q(0), q(2), 1, Branch::Positive};
  const SpectralCoefficients t0 = generalized_ft(expand(ExpMonomialD::term(1.0, q(0), q(1), q(2)), s0, 32));
  const SpectralCoefficients t1 = generalized_ft(expand(ExpMonomialD::term(1.0, q(1), q(4, 5), q(2)), s1, 32));
  auto F = [](double x) { return std::exp(-x * x) + x * std::exp(-0.8 * x * x); };
  double fourier = 0.0;
  for (double xi : {-2.1, 0.0, 0.5, 1.3, 3.1}) {
    const cd transformed = synthesize(t0, std::abs(xi)) + (xi < 0 ? -1.0 : 1.0) * synthesize(t1, std::abs(xi));
    const int n = 40000;
    const double L = 20.0, h = 2 * L / n;
    cd direct{};
    for (int j = 0; j <= n; ++j) {
      const double x = -L + j * h;
      direct += (j == 0 || j == n ? 0.5 : 1.0) * std::exp(cd(0.0, -x * xi)) * F(x);
    }
    direct *= h / std::sqrt(2 * std::numbers::pi);
    fourier = std::max(fourier, std::abs(transformed - direct));
  }

  double kelvin = 0.0;
  for (int n : {1, 2, 3}) {
    const KappaParams kv = KappaParams::intertwiner(n, q(0));
    for (const auto& G : polar_corpus(n)) {
      const PolarSum K = kappa_full(kv, G);
      for (double s : {0.4, 1.0, 2.3}) {
        std::vector<double> x(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = s * (i == 1 ? -0.6 : 0.8) / (i + 1);
        double r2 = 0.0;
        for (double v : x) r2 += v * v;
        std::vector<double> y = x;
        for (auto& v : y) v /= r2;
        const cd expected = std::pow(std::sqrt(r2), -(n - 2)) * G(y);
        kelvin = std::max(kelvin, std::abs(K(x) - expected) / std::max(1.0, std::abs(expected)));
      }
    }
  }
  return {laplacian && fourier <= 1e-6 && kelvin <= 1e-12,
          std::string("Delta_0 = Delta ") + (laplacian ? "exact" : "FAILED") + " on 4 x 50 polynomials, F_{0,2} vs " +
              "Fourier integral " + sci(fourier) + ", Kelvin " + sci(kelvin)};
}

Outcome hilbert_schmidt() {
  double worst = 0.0;
  for_each_valid([&](const LaguerreBasisSpec& spec) {
    const double sign = spec.branch == Branch::Positive ? 1.0 : -1.0;
    for (double x : {0.1, 0.5, 1.0}) {
      const cd z(sign * x, 0.3);
      const double sum = hilbert_schmidt_sum(spec, z), closed = hilbert_schmidt_closed_form(spec, z);
      worst = std::max(worst, std::abs(sum - closed) / closed);
    }
  });
  return {worst <= 1e-10, "max relative error " + sci(worst)};
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "kaharm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  return cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome cli_determinism() {
  const std::filesystem::path configs = KAHARM_CONFIG_DIR;
  const auto base = std::filesystem::temp_directory_path() / "kaharm_acceptance";
  std::filesystem::remove_all(base);
  const std::string pass = (configs / "verify_a1.json").string();
  const int e1 = run_cli({"verify", "--config", pass, "--out", (base / "run1").string()});
  const int e2 = run_cli({"verify", "--config", pass, "--out", (base / "run2").string()});
  const std::string r1 = slurp(base / "run1" / "report.txt");
  const bool identical = !r1.empty() && r1 == slurp(base / "run2" / "report.txt");
  const int fail = run_cli({"verify", "--config", (configs / "verify_same_sign_h.json").string(), "--out",
                            (base / "fail").string()});
  const int error = run_cli({"verify", "--config", (configs / "error_a_zero.json").string(), "--out",
                             (base / "error").string()});
  return {identical && e1 == 0 && e2 == 0 && fail == 1 && error == 2,
          std::string("reports ") + (identical ? "byte-identical" : "DIFFER") + ", exit codes pass/fail/error = " +
              std::to_string(e1) + "/" + std::to_string(fail) + "/" + std::to_string(error)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1. Orthonormality", orthonormality},
      {"2. sl2 relations", sl2_relations},
      {"3. Ladder identities", ladder},
      {"4. Intertwining", intertwining},
      {"5. Spectra", spectra},
      {"6. Semigroup/FT identities", semigroup_and_transform},
      {"7. Classical reductions", classical_reductions},
      {"8. Hilbert-Schmidt decay", hilbert_schmidt},
      {"9. CLI determinism", cli_determinism},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.passed) ++failed;
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "acceptance: all 9 criteria pass" : "acceptance: " + std::to_string(failed) + " failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
