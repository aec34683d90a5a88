#include "kaharm/io.hpp"

#include <charconv>

#include "kaharm/errors.hpp"

namespace kaharm {

namespace {

const Json& require(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(what) + " needs a \"" + key + "\" field");
  return j.at(key);
}

const Json& require_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be a JSON array");
  return j;
}

int integer_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, j.get<double>());
    std::string text(buf, res.ptr);
    if (text.find_first_of("eEn") != std::string::npos) {
      throw ParseError("write " + text + " as a \"p/q\" string");
    }
    return parse_rational(text);
  }
  throw ParseError("expected a rational, got " + j.dump());
}

Json rational_to_json(const Rational& q) { return format_rational(q); }

GaussianRational gaussian_from_json(const Json& j) {
  if (!j.is_array()) return GaussianRational(rational_from_json(j));
  if (j.size() == 1) return GaussianRational(rational_from_json(j[0]));
  if (j.size() == 2) return GaussianRational(rational_from_json(j[0]), rational_from_json(j[1]));
  throw ParseError("complex coefficient must be [re] or [re, im]");
}

Json gaussian_to_json(const GaussianRational& z) {
  if (z.imag() == 0) return rational_to_json(z.real());
  return Json::array({rational_to_json(z.real()), rational_to_json(z.imag())});
}

RootSystem root_system_from_json(const Json& j) {
  const int dim = integer_from_json(require(j, "dimension", "root system"), "dimension");
  if (dim <= 0) throw ParseError("root system dimension must be positive");
  const Json& roots = require_array(require(j, "roots", "root system"), "roots");
  bool exact = true;
  for (const auto& r : roots) {
    require_array(r, "root");
    if (static_cast<int>(r.size()) != dim) throw ParseError("root " + r.dump() + " has the wrong length");
    for (const auto& c : r)
      if (c.is_number_float()) exact = false;
  }
  if (exact) {
    std::vector<VectorQ> rs;
    for (const auto& r : roots) {
      VectorQ v;
      for (const auto& c : r) v.push_back(rational_from_json(c));
      rs.push_back(std::move(v));
    }
    return RootSystem::validate(dim, std::move(rs));
  }
  std::vector<VectorD> rs;
  for (const auto& r : roots) {
    VectorD v;
    for (const auto& c : r) v.push_back(c.is_number() ? c.get<double>() : to_double(rational_from_json(c)));
    rs.push_back(std::move(v));
  }
  return RootSystem::validate(dim, std::move(rs));
}

MultiplicityFunction multiplicity_from_json(const Json& j) {
  RootSystem roots = root_system_from_json(j);
  if (j.contains("k")) return MultiplicityFunction::uniform(std::move(roots), rational_from_json(j.at("k")));
  const Json& entries = require_array(require(j, "multiplicity", "root system"), "multiplicity");
  std::vector<MultiplicityFunction::OrbitValue> values;
  for (const auto& e : entries) {
    const Json& root = require_array(require(e, "orbit_root", "multiplicity entry"), "orbit_root");
    VectorD v;
    for (const auto& c : root) v.push_back(c.is_number() ? c.get<double>() : to_double(rational_from_json(c)));
    values.push_back({std::move(v), rational_from_json(require(e, "k", "multiplicity entry"))});
  }
  return MultiplicityFunction::from_orbits(std::move(roots), values);
}

Json multiplicity_to_json(const MultiplicityFunction& k) {
  const RootSystem& rs = k.root_system();
  Json out{{"dimension", rs.dimension()}};
  Json roots = Json::array();
  if (rs.is_exact()) {
    for (const auto& r : rs.exact_roots()) {
      Json row = Json::array();
      for (const auto& c : r) row.push_back(rational_to_json(c));
      roots.push_back(row);
    }
  } else {
    for (const auto& r : rs.roots()) roots.push_back(r);
  }
  out["roots"] = roots;
  Json mult = Json::array();
  std::vector<bool> seen;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const std::size_t orbit = k.orbit_ids()[i];
    if (orbit < seen.size() && seen[orbit]) continue;
    if (orbit >= seen.size()) seen.resize(orbit + 1, false);
    seen[orbit] = true;
    Json root = Json::array();
    if (rs.is_exact()) {
      for (const auto& c : rs.exact_roots()[i]) root.push_back(rational_to_json(c));
    } else {
      root = rs.roots()[i];
    }
    mult.push_back({{"orbit_root", root}, {"k", rational_to_json(k.value(i))}});
  }
  out["multiplicity"] = mult;
  return out;
}

PolynomialQ polynomial_from_json(const Json& j) {
  const int dim = integer_from_json(require(j, "dim", "polynomial"), "dim");
  if (dim <= 0) throw ParseError("polynomial dimension must be positive");
  PolynomialQ p(dim);
  for (const auto& t : require_array(require(j, "terms", "polynomial"), "terms")) {
    const Json& exps = require_array(require(t, "exps", "polynomial term"), "exps");
    if (static_cast<int>(exps.size()) != dim) throw ParseError("exponent " + exps.dump() + " has the wrong length");
    Exponent e;
    for (const auto& x : exps) {
      const int v = integer_from_json(x, "exponent");
      if (v < 0) throw ParseError("negative exponent in " + exps.dump());
      e.push_back(v);
    }
    p = p + PolynomialQ::monomial(dim, std::move(e), rational_from_json(require(t, "coef", "polynomial term")));
  }
  return p;
}

Json polynomial_to_json(const PolynomialQ& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exps", e}, {"coef", rational_to_json(c)}});
  return {{"dim", p.dimension()}, {"terms", terms}};
}

ExpMonomialQ exp_monomial_from_json(const Json& j) {
  ExpMonomialQ f;
  for (const auto& t : require_array(require(j, "terms", "radial function"), "terms")) {
    const Rational gamma = t.contains("gamma") ? rational_from_json(t.at("gamma")) : Rational(0);
    const Rational q = t.contains("q") ? rational_from_json(t.at("q")) : Rational(0);
    const Rational s = t.contains("s") ? rational_from_json(t.at("s")) : Rational(0);
    f.add_term(gaussian_from_json(require(t, "coef", "radial term")), gamma, q, s);
  }
  return f;
}

Json exp_monomial_to_json(const ExpMonomialQ& f) {
  Json terms = Json::array();
  for (const auto& [key, c] : f.terms()) {
    terms.push_back({{"coef", gaussian_to_json(c)},
                     {"gamma", rational_to_json(key.gamma)},
                     {"q", rational_to_json(key.q)},
                     {"s", rational_to_json(key.s)}});
  }
  return {{"terms", terms}};
}

}  // namespace kaharm
