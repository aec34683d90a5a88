#include "kaharm/sl2.hpp"

#include <algorithm>
#include <cmath>

namespace kaharm {

namespace {

Rational q(long long num, long long den = 1) { return Rational(num, den); }
GaussianRational gq(long long re_num, long long re_den, long long im_num = 0, long long im_den = 1) {
  return {q(re_num, re_den), q(im_num, im_den)};
}

}  // namespace

Sl2Element Sl2Element::cayley_k() { return {0, -GaussianRational::i(), GaussianRational::i()}; }

Sl2Element Sl2Element::cayley_np() { return {gq(0, 1, 1, 2), gq(-1, 2), gq(-1, 2)}; }

Sl2Element Sl2Element::cayley_nm() { return {gq(0, 1, -1, 2), gq(-1, 2), gq(-1, 2)}; }

Sl2Element bracket(const Sl2Element& x, const Sl2Element& y) {
  Sl2Element out;
  out.h = x.ep * y.em - x.em * y.ep;
  out.ep = GaussianRational(2) * (x.h * y.ep - x.ep * y.h);
  out.em = GaussianRational(-2) * (x.h * y.em - x.em * y.h);
  return out;
}

Sl2Element tau(const Sl2Element& x) { return {x.h, -x.ep, -x.em}; }

std::vector<ExpMonomialQ> radial_corpus() {
  using F = ExpMonomialQ;
  std::vector<F> corpus;
  corpus.push_back(F::term(1, q(0)));
  corpus.push_back(F::term(1, q(2)));
  corpus.push_back(F::term(gq(-2, 3), q(-3, 2)));
  corpus.push_back(F::term(1, q(0), q(1), q(1)));
  corpus.push_back(F::term(1, q(1), q(1), q(2)));
  corpus.push_back(F::term(gq(1, 2, 1, 1), q(1, 3), q(2), q(1, 2)));
  corpus.push_back(F::term(1, q(0), q(1), q(-1)));
  corpus.push_back(F::term(gq(0, 1, 3, 4), q(-2), q(3), q(-2)));
  {
    F f = F::term(3, q(5), q(1, 2), q(1));
    f.add_term(gq(2, 1, -1, 1), q(1));
    corpus.push_back(f);
  }
  corpus.push_back(F::term(GaussianRational::i(), q(7, 2)));
  {
    F f = F::term(1, q(-1), q(1), q(1));
    f.add_term(-1, q(1), q(1), q(1));
    corpus.push_back(f);
  }
  corpus.push_back(F::term(gq(5, 7), q(0), q(1), q(3)));
  corpus.push_back(F::term(1, q(2, 3), q(1, 3), q(-1, 2)));
  {
    F f = F::term(gq(1, 1, 1, 1), q(0), q(1), q(2));
    f.add_term(-2, q(0), q(1), q(-2));
    corpus.push_back(f);
  }
  {
    F f = F::term(1, q(4), q(1), q(1, 2));
    f.add_term(-1, q(-4));
    corpus.push_back(f);
  }
  corpus.push_back(F::term(gq(-3, 5, 2, 5), q(-1, 2), q(7, 2), q(3, 2)));
  corpus.push_back(F::term(1, q(10), q(1), q(1)));
  corpus.push_back(F::term(gq(9, 4), q(-5, 3)));
  {
    F f = F::term(1, q(0), q(1, 2), q(2));
    f.add_term(-2, q(2), q(1, 2), q(2));
    corpus.push_back(f);
  }
  {
    F f = F::term(1, q(3));
    f.add_term(gq(0, 1, -5, 1), q(-3), q(1), q(-3));
    corpus.push_back(f);
  }
  return corpus;
}

bool IdentityReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

double IdentityReport::max_defect() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.max_defect);
  return m;
}

IdentityReport verify_sl2_relations(const RadialOperatorSpec& spec, const std::vector<ExpMonomialQ>& corpus) {
  struct Pair {
    const char* name;
    Sl2Element x, y;
  };
  const Sl2Element h = Sl2Element::basis_h(), ep = Sl2Element::basis_ep(), em = Sl2Element::basis_em();
  const Sl2Element k = Sl2Element::cayley_k(), np = Sl2Element::cayley_np(), nm = Sl2Element::cayley_nm();
  const std::vector<Pair> pairs = {{"[H,E+] = 2E+", h, ep},   {"[H,E-] = -2E-", h, em},
                                   {"[E+,E-] = H", ep, em},    {"[k,n+] = 2n+", k, np},
                                   {"[k,n-] = -2n-", k, nm},   {"[n+,n-] = k", np, nm}};
  const std::vector<Sl2Element> expected = {GaussianRational(2) * ep, GaussianRational(-2) * em, h,
                                            GaussianRational(2) * np, GaussianRational(-2) * nm, k};

  IdentityReport report;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto& [name, x, y] = pairs[p];
    const Sl2Element xy = bracket(x, y);
    IdentityCheck check{name, 0.0, xy == expected[p]};
    for (const auto& f : corpus) {
      const ExpMonomialQ lhs = radial_apply(spec, x, radial_apply(spec, y, f)) -
                               radial_apply(spec, y, radial_apply(spec, x, f));
      const ExpMonomialQ defect = lhs - radial_apply(spec, xy, f);
      if (!defect.is_zero()) {
        check.passed = false;
        check.max_defect = std::max(check.max_defect, defect.max_abs_coefficient());
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

const std::vector<double>& ladder_sample_radii() {
  static const std::vector<double> radii = {0.25, 0.5, 1.0, 2.0, 4.0};
  return radii;
}

namespace {

constexpr double kLadderRelativeTolerance = 1e-10;
constexpr double kAnnihilationTolerance = 1e-12;

// Compares n_l * pi(X) P_l against `coefficient * f_target` at the sample radii.
IdentityCheck compare_ladder(const std::string& name, const LaguerreBasisSpec& spec, const Sl2Element& x,
                             int l, std::complex<double> coefficient, std::optional<int> target) {
  const RadialOperatorSpec op = RadialOperatorSpec::from_basis(spec);
  const ExpMonomialD lhs =
      radial_apply(op, x, basis_rational_part(spec, l)).convert<std::complex<double>>() *
      std::complex<double>(basis_normalization(spec, l), 0.0);
  IdentityCheck check{name, 0.0, true};
  if (!target) {
    for (double r : ladder_sample_radii()) check.max_defect = std::max(check.max_defect, std::abs(lhs(r)));
    check.passed = check.max_defect <= kAnnihilationTolerance;
    return check;
  }
  const ExpMonomialD rhs_fn = basis_function(spec, *target);
  for (double r : ladder_sample_radii()) {
    const std::complex<double> rhs = coefficient * rhs_fn(r);
    // Relative to the term magnitudes, which stay finite at zeros of f_target.
    const double scale = std::abs(coefficient) * rhs_fn.abs_sum(r);
    const double err = std::abs(lhs(r) - rhs) / std::max(scale, 1e-300);
    check.max_defect = std::max(check.max_defect, err);
  }
  check.passed = check.max_defect <= kLadderRelativeTolerance;
  return check;
}

}  // namespace

IdentityReport ladder_check(const LaguerreBasisSpec& spec, int l) {
  spec.validate();
  const double lambda = to_double(spec.lambda());
  const std::complex<double> i(0.0, 1.0);
  const std::string tag = std::string(" (") + branch_name(spec.branch) + ", l=" + std::to_string(l) + ")";
  IdentityReport report;
  const double mu = to_double(compact_eigenvalue_formula(spec, l));
  report.checks.push_back(compare_ladder("pi(k) f_l = mu f_l" + tag, spec, Sl2Element::cayley_k(), l, mu, l));
  if (spec.branch == Branch::Positive) {
    report.checks.push_back(compare_ladder("pi(n+) f_l" + tag, spec, Sl2Element::cayley_np(), l,
                                           i * std::sqrt((l + 1.0) * (lambda + l + 1.0)), l + 1));
    if (l == 0) {
      report.checks.push_back(compare_ladder("pi(n-) f_0 = 0" + tag, spec, Sl2Element::cayley_nm(), l, 0.0, {}));
    } else {
      report.checks.push_back(compare_ladder("pi(n-) f_l" + tag, spec, Sl2Element::cayley_nm(), l,
                                             i * std::sqrt(l * (lambda + l)), l - 1));
    }
  } else {
    if (l == 0) {
      report.checks.push_back(compare_ladder("pi(n+) f_0 = 0" + tag, spec, Sl2Element::cayley_np(), l, 0.0, {}));
    } else {
      report.checks.push_back(compare_ladder("pi(n+) f_l" + tag, spec, Sl2Element::cayley_np(), l,
                                             -i * std::sqrt(l * (-lambda + l)), l - 1));
    }
    report.checks.push_back(compare_ladder("pi(n-) f_l" + tag, spec, Sl2Element::cayley_nm(), l,
                                           -i * std::sqrt((l + 1.0) * (-lambda + l + 1.0)), l + 1));
  }
  return report;
}

std::optional<Rational> exact_compact_eigenvalue(const LaguerreBasisSpec& spec, int l) {
  const ExpMonomialQ f = basis_rational_part(spec, l);
  const ExpMonomialQ image = radial_apply(RadialOperatorSpec::from_basis(spec), Sl2Element::cayley_k(), f);
  const auto& [key, c] = *f.terms().begin();
  const auto it = image.terms().find(key);
  const GaussianRational ratio = it == image.terms().end() ? GaussianRational(0) : it->second / c;
  if (ratio.imag() != 0) return std::nullopt;
  if (!(image - f * ratio).is_zero()) return std::nullopt;
  return ratio.real();
}

Rational compact_eigenvalue_formula(const LaguerreBasisSpec& spec, int l) {
  const Rational lambda = spec.lambda();
  if (spec.branch == Branch::Positive) return Rational(lambda + 2 * l + 1);
  return Rational(lambda - 2 * l - 1);
}

}  // namespace kaharm
