#include "kaharm/kappa.hpp"

#include <cmath>

#include "kaharm/laguerre_basis.hpp"

namespace kaharm {

KappaParams kappa_compose(const KappaParams& p1, const KappaParams& p2) {
  return {p1.alpha * p2.alpha, p1.beta + p1.alpha * p2.beta};
}

PolarSum kappa_full(const KappaParams& params, const PolarSum& f) {
  PolarSum out(f.dimension());
  for (const auto& term : f.terms()) {
    for (int m = 0; m <= term.p.degree(); ++m) {
      PolynomialQ pm = term.p.homogeneous_component(m);
      if (pm.is_zero()) continue;
      const Rational beta = params.beta + Rational(m) * (params.alpha - 1);
      out.add(std::move(pm), term.f.substitute(params.alpha, beta));
    }
  }
  return out;
}

Rational kappa_target_exponent(const KappaParams& params, const Rational& d) {
  return params.alpha * d + params.alpha - 2 * params.beta - 1;
}

UnitarityReport kappa_unitarity_check(const KappaParams& params, const ExpMonomialD& f, const Rational& d,
                                      int nodes) {
  UnitarityReport report;
  report.source_norm = std::sqrt(inner_product(f, f, d, nodes).real());
  const ExpMonomialD image = kappa_radial(params, f);
  const double jacobian = std::abs(to_double(params.alpha));
  report.target_norm =
      std::sqrt(jacobian * inner_product(image, image, kappa_target_exponent(params, d), nodes).real());
  report.relative_error = std::abs(report.target_norm - report.source_norm) / report.source_norm;
  report.passed = report.relative_error <= 1e-8;
  return report;
}

namespace {

struct NamedElement {
  const char* name;
  Sl2Element x;
};

std::vector<NamedElement> intertwining_elements() {
  return {{"h", Sl2Element::basis_h()},     {"e+", Sl2Element::basis_ep()},   {"e-", Sl2Element::basis_em()},
          {"k", Sl2Element::cayley_k()},    {"n+", Sl2Element::cayley_np()}, {"n-", Sl2Element::cayley_nm()}};
}

double max_defect(const PolarSum& s) {
  double m = 0.0;
  for (const auto& [key, c] : s.canonical()) m = std::max(m, std::abs(c.to_complex()));
  return m;
}

}  // namespace

IdentityReport radial_intertwining_check(const RadialOperatorSpec& spec, const std::vector<ExpMonomialQ>& corpus) {
  const KappaParams kappa = KappaParams::intertwiner(spec.N, spec.k_index);
  const RadialOperatorSpec flipped = spec.with_a(-spec.a);
  IdentityReport report;
  for (const auto& [name, x] : intertwining_elements()) {
    IdentityCheck check{std::string("kappa pi_a(") + name + ") = pi_-a(tau " + name + ") kappa", 0.0, true};
    for (const auto& f : corpus) {
      const ExpMonomialQ defect =
          kappa_radial(kappa, radial_apply(spec, x, f)) - radial_apply(flipped, tau(x), kappa_radial(kappa, f));
      if (!defect.is_zero()) {
        check.passed = false;
        check.max_defect = std::max(check.max_defect, defect.max_abs_coefficient());
      }
    }
    report.checks.push_back(std::move(check));
  }
  IdentityCheck involution{"kappa^2 = id", 0.0, true};
  for (const auto& f : corpus) {
    const ExpMonomialQ defect = kappa_radial(kappa, kappa_radial(kappa, f)) - f;
    if (!defect.is_zero()) {
      involution.passed = false;
      involution.max_defect = std::max(involution.max_defect, defect.max_abs_coefficient());
    }
  }
  report.checks.push_back(std::move(involution));
  return report;
}

FullIntertwiningReport full_intertwining_check(const MultiplicityFunction& k, const Rational& a,
                                               const std::vector<PolarSum>& corpus) {
  const KappaParams kappa = KappaParams::intertwiner(k.dimension(), k.index());
  FullIntertwiningReport out;
  for (const auto& [name, x] : intertwining_elements()) {
    IdentityCheck check{std::string("kappa pi_a(") + name + ") = pi_-a(tau " + name + ") kappa on R^N", 0.0, true};
    for (const auto& f : corpus) {
      const PolarSum defect = kappa_full(kappa, full_apply(k, a, x, f)) - full_apply(k, -a, tau(x), kappa_full(kappa, f));
      const double d = max_defect(defect);
      check.max_defect = std::max(check.max_defect, d);
      if (!defect.is_zero()) check.passed = false;
    }
    out.relations.checks.push_back(std::move(check));
  }
  IdentityCheck involution{"kappa^2 = id on R^N", 0.0, true};
  IdentityCheck same{"kappa H_a = H_a kappa on R^N", 0.0, true};
  for (const auto& f : corpus) {
    const PolarSum back = kappa_full(kappa, kappa_full(kappa, f)) - f;
    involution.max_defect = std::max(involution.max_defect, max_defect(back));
    if (!back.is_zero()) involution.passed = false;
    const Sl2Element h = Sl2Element::basis_h();
    const PolarSum defect = kappa_full(kappa, full_apply(k, a, h, f)) - full_apply(k, a, h, kappa_full(kappa, f));
    same.max_defect = std::max(same.max_defect, max_defect(defect));
    if (!defect.is_zero()) same.passed = false;
  }
  out.relations.checks.push_back(std::move(involution));
  out.same_sign_h = same;
  return out;
}

}  // namespace kaharm
