#include "kaharm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "kaharm/dunkl.hpp"
#include "kaharm/errors.hpp"
#include "kaharm/kappa.hpp"
#include "kaharm/laguerre_basis.hpp"
#include "kaharm/polar.hpp"
#include "kaharm/sl2.hpp"
#include "kaharm/spectral.hpp"

namespace kaharm::cli {

// ---------------------------------------------------------------- config

namespace {

const std::map<std::string, std::string>& default_outputs() {
  static const std::map<std::string, std::string> d = {{"report", "report.txt"},
                                                       {"spectrum", "spectrum.csv"},
                                                       {"coefficients_before", "coefficients_before.csv"},
                                                       {"coefficients_after", "coefficients_after.csv"},
                                                       {"basis_table", "basis_table.csv"}};
  return d;
}

void reject_unknown(const Json& j, const std::set<std::string>& known, const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

int int_field(const Json& j, const char* key, int fallback, int lo, int hi) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw ConfigError(std::string(key) + " must be an integer");
  const long long x = v.get<long long>();
  if (x < lo || x > hi) {
    throw ConfigError(std::string(key) + " = " + std::to_string(x) + " is outside [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }
  return static_cast<int>(x);
}

std::complex<double> complex_field(const Json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ConfigError("z must be a number or [re, im]");
}

MultiplicityFunction multiplicity_from_config(const Json& j, std::string& label) {
  if (!j.contains("root_system")) throw ConfigError("config needs a \"root_system\"");
  const Json& rs = j.at("root_system");
  if (rs.is_object() && (rs.contains("multiplicity") || rs.contains("k"))) {
    if (j.contains("k")) throw ConfigError("give k either inline with the root system or at top level, not both");
    label = "inline";
    return multiplicity_from_json(rs);
  }
  RootSystem roots = [&] {
    if (rs.is_string()) {
      label = rs.get<std::string>();
      return preset_root_system(label);
    }
    if (rs.is_object()) {
      label = "inline";
      return root_system_from_json(rs);
    }
    throw ConfigError("root_system must be a preset name or a JSON root system");
  }();
  if (!j.contains("k")) throw ConfigError("config needs multiplicity values \"k\"");
  const Json& k = j.at("k");
  if (!k.is_array()) return MultiplicityFunction::uniform(std::move(roots), rational_from_json(k));
  std::vector<MultiplicityFunction::OrbitValue> values;
  for (const auto& e : k) {
    if (!e.is_object() || !e.contains("orbit_root") || !e.contains("k")) {
      throw ConfigError("each k entry needs \"orbit_root\" and \"k\"");
    }
    VectorD v;
    for (const auto& c : e.at("orbit_root")) v.push_back(c.is_number() ? c.get<double>() : to_double(rational_from_json(c)));
    values.push_back({std::move(v), rational_from_json(e.at("k"))});
  }
  return MultiplicityFunction::from_orbits(std::move(roots), values);
}

TransformRequest transform_from_config(const Json& t) {
  if (!t.is_object()) throw ConfigError("transform must be an object");
  reject_unknown(t, {"kind", "z", "input"}, "transform");
  TransformRequest req;
  const std::string kind = t.value("kind", std::string("fourier"));
  if (kind == "fourier") {
    req.kind = TransformRequest::Kind::Fourier;
  } else if (kind == "inverse_fourier") {
    req.kind = TransformRequest::Kind::InverseFourier;
  } else if (kind == "semigroup") {
    req.kind = TransformRequest::Kind::Semigroup;
    if (!t.contains("z")) throw ConfigError("semigroup transform needs z");
    req.z = complex_field(t.at("z"));
  } else {
    throw ConfigError("transform kind must be fourier, inverse_fourier or semigroup, not '" + kind + "'");
  }
  if (!t.contains("input")) throw ConfigError("transform needs an \"input\" term list");
  req.input = exp_monomial_from_json(t.at("input"));
  return req;
}

std::vector<double> r_grid_from_config(const Json& b) {
  if (b.contains("r")) {
    std::vector<double> r;
    for (const auto& v : b.at("r")) {
      if (!v.is_number() || v.get<double>() <= 0) throw ConfigError("r-grid values must be positive numbers");
      r.push_back(v.get<double>());
    }
    if (r.empty()) throw ConfigError("r-grid is empty");
    return r;
  }
  const double lo = b.value("r_min", 0.25);
  const double hi = b.value("r_max", 4.0);
  const int count = int_field(b, "count", 16, 1, 100000);
  if (!(lo > 0) || !(hi >= lo)) throw ConfigError("r-grid needs 0 < r_min <= r_max");
  std::vector<double> r;
  for (int i = 0; i < count; ++i) r.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
  return r;
}

}  // namespace

RunConfig load_config(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(j,
                 {"root_system", "k", "a", "sectors", "truncation", "nodes", "seed", "outputs", "transform",
                  "basis_table", "checks"},
                 "config");
  RunConfig c;
  c.k = multiplicity_from_config(j, c.root_system_label);

  if (!j.contains("a")) throw ConfigError("config needs the deformation parameter \"a\"");
  c.a = rational_from_json(j.at("a"));
  if (c.a == 0) throw ConfigError("a must be nonzero");

  if (j.contains("sectors")) {
    c.sectors.clear();
    for (const auto& m : j.at("sectors")) {
      if (!m.is_number_integer() || m.get<long long>() < 0 || m.get<long long>() > 64) {
        throw ConfigError("sectors must be integers in [0, 64]");
      }
      c.sectors.push_back(m.get<int>());
    }
    if (c.sectors.empty()) throw ConfigError("sectors is empty");
    if (std::set<int>(c.sectors.begin(), c.sectors.end()).size() != c.sectors.size()) {
      throw ConfigError("sectors contains duplicates");
    }
  }
  c.truncation = int_field(j, "truncation", 32, 1, 4096);
  c.nodes = int_field(j, "nodes", 128, 2, 4096);
  c.seed = static_cast<unsigned>(int_field(j, "seed", 1, 0, 2147483647));

  c.outputs = default_outputs();
  if (j.contains("outputs")) {
    const Json& o = j.at("outputs");
    if (!o.is_object()) throw ConfigError("outputs must be an object");
    for (const auto& [key, value] : o.items()) {
      if (!c.outputs.contains(key)) throw ConfigError("unknown output '" + key + "'");
      if (!value.is_string() || value.get<std::string>().empty()) throw ConfigError("output '" + key + "' needs a file name");
      c.outputs[key] = value.get<std::string>();
    }
  }
  if (j.contains("transform")) c.transform = transform_from_config(j.at("transform"));

  const Json table = j.value("basis_table", Json::object());
  if (!table.is_object()) throw ConfigError("basis_table must be an object");
  reject_unknown(table, {"r", "r_min", "r_max", "count", "l_max"}, "basis_table");
  c.r_grid = r_grid_from_config(table);
  c.basis_l_max = int_field(table, "l_max", 7, 0, 4096);

  const Json checks = j.value("checks", Json::object());
  if (!checks.is_object()) throw ConfigError("checks must be an object");
  reject_unknown(checks, {"same_sign_h"}, "checks");
  if (checks.contains("same_sign_h")) {
    if (!checks.at("same_sign_h").is_boolean()) throw ConfigError("checks.same_sign_h must be true or false");
    c.check_same_sign_h = checks.at("same_sign_h").get<bool>();
  }

  for (int m : c.sectors) {
    const auto spec = LaguerreBasisSpec::from_signed(c.dimension(), c.multiplicity().index(), c.a, m);
    if (!spec.hypothesis_holds()) {
      try {
        spec.validate();
      } catch (const BranchHypothesisViolated& e) {
        const std::string detail = std::string(e.what()).substr(e.kind().size() + 2);
        throw BranchHypothesisViolated("sector m=" + std::to_string(m) + ": " + detail);
      }
    }
  }
  return c;
}

RunConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("config '" + path.string() + "': " + e.what());
  }
  return load_config(j);
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

// ---------------------------------------------------------------- verify

namespace {

constexpr double kGramTolerance = 1e-8;
constexpr double kMultiplierTolerance = 1e-12;
constexpr double kHilbertSchmidtTolerance = 1e-10;
constexpr double kUnitarityTolerance = 1e-8;
constexpr double kNumericPolyTolerance = 1e-10;

std::string format_defect(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

class ReportWriter {
 public:
  void section(const std::string& title) { text_ << "\n[" << title << "]\n"; }
  void line(const std::string& s) { text_ << "  " << s << '\n'; }

  void check(const std::string& name, bool ok, double defect) {
    text_ << (ok ? "PASS  " : "FAIL  ") << name << "  (max defect " << format_defect(defect) << ")\n";
    ++total_;
    if (!ok) ++failed_;
  }
  void check(const IdentityCheck& c, const std::string& suffix) { check(c.name + suffix, c.passed, c.max_defect); }
  void report(const IdentityReport& r, const std::string& suffix) {
    for (const auto& c : r.checks) check(c, suffix);
  }
  void skip(const std::string& name, const std::string& why) { text_ << "SKIP  " << name << "  (" << why << ")\n"; }

  VerifyResult finish() {
    text_ << "\nRESULT: " << (failed_ == 0 ? "PASS" : "FAIL") << " (" << total_ - failed_ << "/" << total_
          << " checks passed)\n";
    return {text_.str(), failed_ == 0};
  }

 private:
  std::ostringstream text_;
  int total_ = 0;
  int failed_ = 0;
};

std::string sector_tag(int m, Branch b) { return " [m=" + std::to_string(m) + ", " + branch_name(b) + "]"; }

PolynomialQ random_polynomial(std::mt19937& rng, int dim, int max_degree, int terms) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-9, 9), den(1, 4), var(0, dim - 1);
  PolynomialQ p(dim);
  for (int t = 0; t < terms; ++t) {
    Exponent e(static_cast<std::size_t>(dim), 0);
    const int d = deg(rng);
    for (int j = 0; j < d; ++j) ++e[static_cast<std::size_t>(var(rng))];
    p = p + PolynomialQ::monomial(dim, e, Rational(coef(rng), den(rng)));
  }
  return p;
}

PolynomialD to_double_poly(const PolynomialQ& p) {
  PolynomialD out(p.dimension());
  for (const auto& [e, c] : p.terms()) out = out + PolynomialD::monomial(p.dimension(), e, to_double(c));
  return out;
}

LaguerreBasisSpec sector_spec(const RunConfig& c, int m, Branch b) {
  const Rational mag = c.a > 0 ? c.a : Rational(-c.a);
  return {c.dimension(), c.multiplicity().index(), mag, m, b};
}

/// Decaying functions in the matched class of a sector: their expansions
/// converge geometrically (ratio at most 1/7) in the branch basis.
std::vector<ExpMonomialD> sector_corpus(const LaguerreBasisSpec& spec) {
  const bool plus = spec.branch == Branch::Positive;
  const Rational s = plus ? spec.a : Rational(-spec.a);
  const Rational g = plus ? Rational(spec.m) : Rational(-(spec.shift() + spec.m));
  const Rational q0 = 1 / spec.a;
  std::vector<ExpMonomialD> out;
  out.push_back(ExpMonomialD::term(1.0, g, q0 * Rational(3, 4), s));
  ExpMonomialD finite = ExpMonomialD::term(1.0, g, q0, s);
  finite.add_term(-0.5, g + s, q0, s);
  finite.add_term(0.25, g + 2 * s, q0, s);
  out.push_back(finite);
  out.push_back(ExpMonomialD::term({0.5, -1.0}, g + s, q0 * Rational(5, 4), s));
  return out;
}

void verify_root_system(const RunConfig& c, ReportWriter& w) {
  const MultiplicityFunction& k = c.multiplicity();
  const RootSystem& rs = k.root_system();
  w.section("root system");
  w.line("source " + c.root_system_label + ", N = " + std::to_string(rs.dimension()) + ", |R| = " +
         std::to_string(rs.size()) + ", |R+| = " + std::to_string(rs.positive_indices().size()) + ", " +
         (rs.is_exact() ? "exact" : "float-backed") + " coordinates");
  w.check("reduced and closed under its reflections", true, 0.0);
  const auto group = coxeter_group(rs);
  w.line("reflection group order " + std::to_string(group.size()));
  bool invariant = true;
  for (const auto& g : group)
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const auto& alpha = rs.roots()[i];
      VectorD image(alpha.size(), 0.0);
      for (int r = 0; r < rs.dimension(); ++r)
        for (int s = 0; s < rs.dimension(); ++s) image[r] += g(r, s) * alpha[s];
      const auto j = rs.find(image);
      if (!j || k.value(*j) != k.value(i)) invariant = false;
    }
  w.check("group maps R onto R with k constant on orbits", invariant, invariant ? 0.0 : 1.0);
  Rational index(0);
  for (auto i : rs.positive_indices()) index += k.value(i);
  w.check("<k> = " + format_rational(k.index()) + " is the sum over R+", index == k.index(),
          index == k.index() ? 0.0 : 1.0);
}

void verify_dunkl(const RunConfig& c, ReportWriter& w) {
  const MultiplicityFunction& k = c.multiplicity();
  const int n = c.dimension();
  const MultiplicityFunction zero = MultiplicityFunction::uniform(k.root_system(), Rational(0));
  std::mt19937 rng(c.seed);
  std::vector<PolynomialQ> polys;
  for (int i = 0; i < 50; ++i) polys.push_back(random_polynomial(rng, n, 4, 4));
  w.section("Dunkl Laplacian");
  if (k.root_system().is_exact()) {
    const DunklData<Rational> d0(zero), dk(k);
    bool classical = true, difference = true;
    for (const auto& p : polys) {
      classical = classical && dunkl_laplacian(d0, p) == classical_laplacian(p);
      difference = difference && dunkl_laplacian(dk, p) == dunkl_laplacian_difference_form(dk, p);
    }
    w.check("Delta_0 = Delta on 50 random polynomials (exact)", classical, classical ? 0.0 : 1.0);
    w.check("Delta_k = gradient part + reflection differences on 50 random polynomials (exact)", difference,
            difference ? 0.0 : 1.0);
  } else {
    const DunklData<double> d0(zero), dk(k);
    double classical = 0.0, difference = 0.0;
    for (const auto& q : polys) {
      const PolynomialD p = to_double_poly(q);
      const double scale = std::max(1.0, p.max_abs_coefficient());
      classical = std::max(classical, (dunkl_laplacian(d0, p) - classical_laplacian(p)).max_abs_coefficient() / scale);
      difference = std::max(
          difference, (dunkl_laplacian(dk, p) - dunkl_laplacian_difference_form(dk, p)).max_abs_coefficient() / scale);
    }
    w.check("Delta_0 = Delta on 50 random polynomials (float)", classical <= kNumericPolyTolerance, classical);
    w.check("Delta_k = gradient part + reflection differences on 50 random polynomials (float)",
            difference <= kNumericPolyTolerance, difference);
  }
}

void verify_basis(const RunConfig& c, ReportWriter& w) {
  const int size = std::min(8, c.truncation);
  w.section("orthonormality");
  for (int m : c.sectors)
    for (Branch b : {Branch::Positive, Branch::Negative}) {
      const LaguerreBasisSpec spec = sector_spec(c, m, b);
      const auto gram = gram_matrix(spec, size);
      double worst = 0.0;
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) worst = std::max(worst, std::abs(gram[i][j] - (i == j ? 1.0 : 0.0)));
      w.check(std::to_string(size) + "x" + std::to_string(size) + " Gram matrix is the identity" + sector_tag(m, b),
              worst <= kGramTolerance, worst);
    }
}

void verify_sl2(const RunConfig& c, ReportWriter& w) {
  w.section("sl2 relations");
  for (int m : c.sectors)
    for (Branch b : {Branch::Positive, Branch::Negative}) {
      const IdentityReport r = verify_sl2_relations(RadialOperatorSpec::from_basis(sector_spec(c, m, b)));
      w.report(r, sector_tag(m, b));
    }
  w.section("ladder actions");
  const int l_max = std::min(7, c.truncation - 1);
  for (int m : c.sectors)
    for (Branch b : {Branch::Positive, Branch::Negative}) {
      const LaguerreBasisSpec spec = sector_spec(c, m, b);
      bool ok = true;
      double worst = 0.0;
      for (int l = 0; l <= l_max; ++l) {
        const IdentityReport r = ladder_check(spec, l);
        ok = ok && r.passed();
        worst = std::max(worst, r.max_defect());
      }
      w.check("n+, n-, k on f_l for l <= " + std::to_string(l_max) + sector_tag(m, b), ok, worst);
    }
  w.section("spectrum of k");
  for (int m : c.sectors)
    for (Branch b : {Branch::Positive, Branch::Negative}) {
      const LaguerreBasisSpec spec = sector_spec(c, m, b);
      bool ok = true;
      for (int l = 0; l <= 5; ++l) {
        const auto mu = exact_compact_eigenvalue(spec, l);
        ok = ok && mu && *mu == compact_eigenvalue_formula(spec, l);
      }
      w.check(std::string("eigenvalues ") + (b == Branch::Positive ? "lambda + 2l + 1" : "lambda - 2l - 1") +
                  " for l <= 5 (exact)" + sector_tag(m, b),
              ok, ok ? 0.0 : 1.0);
    }
}

std::vector<PolarSum> polar_corpus(const RunConfig& c) {
  const MultiplicityFunction& k = c.multiplicity();
  const int n = c.dimension();
  const auto radial = radial_corpus();
  std::mt19937 rng(c.seed + 1);
  std::vector<PolarSum> out;
  for (int m : c.sectors) {
    if (m > 3) continue;
    const auto harmonics = k_harmonic_basis<Rational>(k, m);
    for (std::size_t i = 0; i < harmonics.basis.size() && i < 2; ++i) {
      out.push_back(PolarSum::spherical(harmonics.basis[i], radial[(2 * i + m) % radial.size()]));
    }
  }
  for (std::size_t i = 0; i < radial.size(); i += 5) {
    PolarSum s(n);
    s.add(random_polynomial(rng, n, 3, 3), radial[i]);
    out.push_back(s);
  }
  return out;
}

void verify_kappa(const RunConfig& c, ReportWriter& w) {
  const int n = c.dimension();
  const Rational& index = c.multiplicity().index();
  const KappaParams kappa = KappaParams::intertwiner(n, index);
  w.section("kappa");
  w.line("intertwiner kappa_{" + format_rational(kappa.alpha) + ", " + format_rational(kappa.beta) + "}");
  const std::vector<KappaParams> samples = {{Rational(2), Rational(1)}, {Rational(-1, 2), Rational(3)},
                                            {Rational(3), Rational(-2, 5)}, kappa};
  bool law = kappa_compose(kappa, kappa) == KappaParams{};
  for (const auto& p : samples) {
    const KappaParams inverse{1 / p.alpha, -p.beta / p.alpha};
    law = law && kappa_compose(p, inverse) == KappaParams{} && kappa_compose(inverse, p) == KappaParams{} &&
          kappa_compose(p, KappaParams{}) == p;
    for (const auto& q : samples)
      for (const auto& r : samples)
        law = law && kappa_compose(kappa_compose(p, q), r) == kappa_compose(p, kappa_compose(q, r));
  }
  w.check("group law, identity, inverses and kappa^2 = id on parameters (exact)", law, law ? 0.0 : 1.0);

  for (int m : c.sectors) {
    const LaguerreBasisSpec plus = sector_spec(c, m, Branch::Positive);
    const LaguerreBasisSpec minus = sector_spec(c, m, Branch::Negative);
    const std::string tag = " [m=" + std::to_string(m) + "]";
    w.report(radial_intertwining_check(RadialOperatorSpec::from_basis(plus), radial_corpus()), tag);
    const bool target = kappa_target_exponent(kappa, plus.measure_exponent()) == minus.measure_exponent();
    w.check("kappa maps L^2(r^{d+}) onto L^2(r^{d-})" + tag, target, target ? 0.0 : 1.0);
    std::vector<ExpMonomialD> functions = sector_corpus(plus);
    for (int l = 0; l < 4; ++l) functions.push_back(basis_function(plus, l));
    bool unitary = true;
    double worst = 0.0;
    for (const auto& f : functions) {
      const UnitarityReport r = kappa_unitarity_check(kappa, f, plus.measure_exponent(), c.nodes);
      unitary = unitary && r.relative_error <= kUnitarityTolerance;
      worst = std::max(worst, r.relative_error);
    }
    w.check("kappa is unitary on " + std::to_string(functions.size()) + " functions" + tag, unitary, worst);
    double image = 0.0;
    for (int l = 0; l < 4; ++l) {
      const ExpMonomialQ diff = kappa_radial(kappa, basis_rational_part(plus, l)) - basis_rational_part(minus, l);
      image = std::max(image, diff.is_zero() ? 0.0 : diff.max_abs_coefficient());
    }
    w.check("kappa f_{+a,l} = f_{-a,l} for l < 4 (exact)" + tag, image == 0.0, image);
  }

  const Rational mag = c.a > 0 ? c.a : Rational(-c.a);
  if (!c.multiplicity().root_system().is_exact()) {
    w.skip("intertwining on R^N", "float-backed root system; the polar calculus is exact only");
    if (c.check_same_sign_h) w.skip("same-sign H relation", "float-backed root system");
    return;
  }
  const FullIntertwiningReport full = full_intertwining_check(c.multiplicity(), mag, polar_corpus(c));
  w.report(full.relations, "");
  if (c.check_same_sign_h) w.check(full.same_sign_h, " (requested by checks.same_sign_h)");
}

void verify_transforms(const RunConfig& c, ReportWriter& w) {
  w.section("semigroup and transform");
  const std::vector<std::complex<double>> zs = {{0.0, 0.0}, {0.3, 0.0}, {0.2, 1.0}, {0.0, 1.5}, {1.0, -0.7}};
  for (int m : c.sectors) {
    const LaguerreBasisSpec plus = sector_spec(c, m, Branch::Positive);
    const LaguerreBasisSpec minus = sector_spec(c, m, Branch::Negative);
    for (const LaguerreBasisSpec& spec : {plus, minus}) {
      const double sign = spec.branch == Branch::Positive ? 1.0 : -1.0;
      double worst = 0.0;
      for (int l = 0; l < c.truncation; ++l)
        for (const auto& z1 : zs)
          for (const auto& z2 : zs) {
            const auto lhs = semigroup_multiplier(spec, sign * z1, l) * semigroup_multiplier(spec, sign * z2, l);
            const auto rhs = semigroup_multiplier(spec, sign * (z1 + z2), l);
            const double scale = std::max(std::abs(rhs), std::abs(lhs));
            if (scale > 0) worst = std::max(worst, std::abs(lhs - rhs) / scale);
          }
      w.check("Lambda(z1) Lambda(z2) = Lambda(z1 + z2) on multipliers" + sector_tag(m, spec.branch),
              worst <= kMultiplierTolerance, worst);

      double hs = 0.0;
      for (double x : {0.1, 0.5, 1.0}) {
        const std::complex<double> z(sign * x, 0.7);
        const double sum = hilbert_schmidt_sum(spec, z);
        const double closed = hilbert_schmidt_closed_form(spec, z);
        hs = std::max(hs, std::abs(sum - closed) / closed);
      }
      w.check("Hilbert-Schmidt sum matches its closed form for |Re z| in {0.1, 0.5, 1}" + sector_tag(m, spec.branch),
              hs <= kHilbertSchmidtTolerance, hs);
    }

    try {
      validate_ft(plus);
      validate_ft(minus);
    } catch (const BranchHypothesisViolated& e) {
      w.skip("transform identities [m=" + std::to_string(m) + "]", e.what());
      continue;
    }
    for (const LaguerreBasisSpec& spec : {plus, minus}) {
      double boundary = 0.0;
      for (int l = 0; l < c.truncation; ++l) boundary = std::max(boundary, ft_semigroup_defect(spec, l));
      w.check("F = e^{i pi (lambda_0 + 1)/2} Lambda(i pi/2) on multipliers" + sector_tag(m, spec.branch),
              boundary <= kMultiplierTolerance, boundary);
      double parseval = 0.0, unitary = 0.0, inverse = 0.0;
      for (const auto& f : sector_corpus(spec)) {
        const SpectralCoefficients coeffs = expand(f, spec, c.truncation, c.nodes);
        const double norm2 = inner_product(f, f, spec.measure_exponent(), c.nodes).real();
        parseval = std::max(parseval, coeffs.norm_squared() - norm2);
        const SpectralCoefficients ft = generalized_ft(coeffs);
        unitary = std::max(unitary, std::abs(ft.norm_squared() - coeffs.norm_squared()) / coeffs.norm_squared());
        const SpectralCoefficients back = inverse_generalized_ft(ft);
        for (int l = 0; l < c.truncation; ++l) inverse = std::max(inverse, std::abs(back.coeffs[l] - coeffs.coeffs[l]));
      }
      w.check("Parseval: sum |c_l|^2 <= ||f||^2 + 1e-8" + sector_tag(m, spec.branch), parseval <= 1e-8,
              std::max(parseval, 0.0));
      w.check("F preserves coefficient norms" + sector_tag(m, spec.branch), unitary <= kMultiplierTolerance, unitary);
      w.check("F^-1 F = id on coefficients" + sector_tag(m, spec.branch), inverse <= kMultiplierTolerance, inverse);
    }
    w.report(intertwine_check_ft(plus, sector_corpus(plus), c.truncation, c.nodes), " [m=" + std::to_string(m) + "]");
  }
}

}  // namespace

VerifyResult verify_report(const RunConfig& c) {
  ReportWriter w;
  w.line("verification report");
  w.line("root system " + c.root_system_label + ", <k> = " + format_rational(c.multiplicity().index()) +
         ", a = " + format_rational(c.a));
  std::string sectors;
  for (int m : c.sectors) sectors += (sectors.empty() ? "" : ", ") + std::to_string(m);
  w.line("sectors {" + sectors + "}, truncation " + std::to_string(c.truncation) + ", nodes " +
         std::to_string(c.nodes) + ", seed " + std::to_string(c.seed));
  verify_root_system(c, w);
  verify_dunkl(c, w);
  verify_basis(c, w);
  verify_sl2(c, w);
  verify_kappa(c, w);
  verify_transforms(c, w);
  return w.finish();
}

// ---------------------------------------------------------------- tables

std::string spectrum_csv(const RunConfig& c) {
  std::ostringstream out;
  out << "branch,m,l,eigenvalue,eigenvalue_float\n";
  for (Branch b : {Branch::Positive, Branch::Negative})
    for (int m : c.sectors) {
      const LaguerreBasisSpec spec = sector_spec(c, m, b);
      for (int l = 0; l < c.truncation; ++l) {
        const Rational mu = compact_eigenvalue_formula(spec, l);
        out << branch_name(b) << ',' << m << ',' << l << ',' << format_rational(mu) << ','
            << format_double(to_double(mu)) << '\n';
      }
    }
  return out.str();
}

std::pair<std::string, std::string> transform_csv(const RunConfig& c) {
  if (!c.transform) throw ConfigError("the transform command needs a \"transform\" block");
  const TransformRequest& t = *c.transform;
  const ExpMonomialD f = t.input.convert<std::complex<double>>();
  std::ostringstream before, after;
  before << "m,l,re,im\n";
  after << "m,l,re,im\n";
  const Branch branch = c.a > 0 ? Branch::Positive : Branch::Negative;
  for (int m : c.sectors) {
    const LaguerreBasisSpec spec = sector_spec(c, m, branch);
    const SpectralCoefficients coeffs = expand(f, spec, c.truncation, c.nodes);
    SpectralCoefficients result;
    switch (t.kind) {
      case TransformRequest::Kind::Fourier:
        result = generalized_ft(coeffs);
        break;
      case TransformRequest::Kind::InverseFourier:
        result = inverse_generalized_ft(coeffs);
        break;
      case TransformRequest::Kind::Semigroup:
        result = laguerre_semigroup(t.z, coeffs);
        break;
    }
    for (int l = 0; l < c.truncation; ++l) {
      before << m << ',' << l << ',' << format_double(coeffs.coeffs[l].real()) << ','
             << format_double(coeffs.coeffs[l].imag()) << '\n';
      after << m << ',' << l << ',' << format_double(result.coeffs[l].real()) << ','
            << format_double(result.coeffs[l].imag()) << '\n';
    }
  }
  return {before.str(), after.str()};
}

std::string basis_table_csv(const RunConfig& c) {
  std::ostringstream out;
  out << "branch,m,l,r,f_value\n";
  for (Branch b : {Branch::Positive, Branch::Negative})
    for (int m : c.sectors) {
      const LaguerreBasisSpec spec = sector_spec(c, m, b);
      for (int l = 0; l <= c.basis_l_max; ++l)
        for (double r : c.r_grid) {
          out << branch_name(b) << ',' << m << ',' << l << ',' << format_double(r) << ','
              << format_double(basis_value(spec, l, r)) << '\n';
        }
    }
  return out.str();
}

// ---------------------------------------------------------------- entry point

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path().empty() ? std::filesystem::path(".") : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw ConfigError("failed writing '" + path.string() + "'");
}

struct Options {
  std::string config;
  std::string out_dir = ".";
  std::optional<int> nodes;
  std::optional<int> truncation;
};

void add_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config, "JSON run configuration")->required();
  cmd->add_option("--out", o.out_dir, "output directory");
  cmd->add_option("--nodes", o.nodes, "quadrature nodes (overrides the config)")->check(CLI::Range(2, 4096));
  cmd->add_option("--truncation", o.truncation, "truncation L (overrides the config)")->check(CLI::Range(1, 4096));
}

RunConfig load(const Options& o) {
  RunConfig c = load_config_file(o.config);
  if (o.nodes) c.nodes = *o.nodes;
  if (o.truncation) c.truncation = *o.truncation;
  return c;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"(k,a)-generalized harmonic analysis: verification suite and tables"};
  app.require_subcommand(1);
  Options opts;
  CLI::App* verify = app.add_subcommand("verify", "run every identity check and write the report");
  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues of the compact generator");
  CLI::App* transform = app.add_subcommand("transform", "expand a radial function and apply F or Lambda(z)");
  CLI::App* table = app.add_subcommand("basis-table", "values of the basis functions on an r-grid");
  for (CLI::App* cmd : {verify, spectrum, transform, table}) add_options(cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    const RunConfig config = load(opts);
    const std::filesystem::path dir(opts.out_dir);
    auto target = [&](const char* key) { return dir / config.outputs.at(key); };
    if (verify->parsed()) {
      const VerifyResult r = verify_report(config);
      write_file(target("report"), r.report);
      out << (r.passed ? "verify: all checks passed" : "verify: invariant failure") << " (report "
          << target("report").string() << ")\n";
      return r.passed ? kPass : kInvariantFailure;
    }
    if (spectrum->parsed()) {
      write_file(target("spectrum"), spectrum_csv(config));
      out << "spectrum: wrote " << target("spectrum").string() << '\n';
    } else if (transform->parsed()) {
      const auto [before, after] = transform_csv(config);
      write_file(target("coefficients_before"), before);
      write_file(target("coefficients_after"), after);
      out << "transform: wrote " << target("coefficients_before").string() << " and "
          << target("coefficients_after").string() << '\n';
    } else if (table->parsed()) {
      write_file(target("basis_table"), basis_table_csv(config));
      out << "basis-table: wrote " << target("basis_table").string() << '\n';
    }
    return kPass;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Json::exception& e) {
    err << "error: ParseError: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kConfigError;
}

}  // namespace kaharm::cli
