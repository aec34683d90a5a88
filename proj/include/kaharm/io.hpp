#pragma once

// JSON forms of the library's exact objects. Rationals are written as "p/q"
// strings; on input integers, decimal strings and JSON numbers are accepted
// too (a JSON number is read through its shortest decimal form).

#include <json.hpp>

#include "kaharm/exp_monomial.hpp"
#include "kaharm/polynomial.hpp"
#include "kaharm/rational.hpp"
#include "kaharm/root_system.hpp"

namespace kaharm {

using Json = nlohmann::json;

Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& q);

/// [re] or [re, im] or a single rational.
GaussianRational gaussian_from_json(const Json& j);
Json gaussian_to_json(const GaussianRational& z);

/// {"dimension": N, "roots": [[...], ...]}. Any JSON floating-point coordinate
/// makes the system float-backed; otherwise it is exact.
RootSystem root_system_from_json(const Json& j);

/// The root system document with "multiplicity": [{"orbit_root": [...], "k": "p/q"}],
/// one entry per orbit, or a single rational "k" applied to every root.
MultiplicityFunction multiplicity_from_json(const Json& j);
Json multiplicity_to_json(const MultiplicityFunction& k);

/// {"dim": N, "terms": [{"exps": [..], "coef": "p/q"}]}
PolynomialQ polynomial_from_json(const Json& j);
Json polynomial_to_json(const PolynomialQ& p);

/// {"terms": [{"coef": c, "gamma": "p/q", "q": "p/q", "s": "p/q"}]}; q and s
/// default to 0 and coef may be complex ([re, im]).
ExpMonomialQ exp_monomial_from_json(const Json& j);
Json exp_monomial_to_json(const ExpMonomialQ& f);

}  // namespace kaharm
