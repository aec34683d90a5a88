#include "kaharm/polar.hpp"

#include <cmath>

namespace kaharm {

PolarSum PolarSum::product(PolynomialQ p, ExpMonomialQ f) {
  PolarSum s(p.dimension());
  s.add(std::move(p), std::move(f));
  return s;
}

PolarSum PolarSum::spherical(const PolynomialQ& p, const ExpMonomialQ& f) {
  if (!p.is_homogeneous()) throw InputNotPolarForm("spherical factor must be a homogeneous polynomial");
  const int m = std::max(p.degree(), 0);
  return product(p, f.times_power(Rational(-m)));
}

void PolarSum::add(PolynomialQ p, ExpMonomialQ f) {
  if (p.dimension() != dim_) throw InputNotPolarForm("polynomial factor has the wrong dimension");
  if (p.is_zero() || f.is_zero()) return;
  terms_.push_back({std::move(p), std::move(f)});
}

PolarSum& PolarSum::operator+=(const PolarSum& o) {
  if (o.dim_ != dim_) throw InputNotPolarForm("adding polar sums of different dimensions");
  for (const auto& t : o.terms_) terms_.push_back(t);
  return *this;
}

PolarSum& PolarSum::operator*=(const GaussianRational& s) {
  for (auto& t : terms_) t.f *= s;
  return *this;
}

PolarSum::Canonical PolarSum::canonical() const {
  Canonical out;
  for (const auto& t : terms_)
    for (const auto& [e, pc] : t.p.terms())
      for (const auto& [key, fc] : t.f.terms()) {
        auto [it, inserted] = out.try_emplace({e, key}, GaussianRational(0));
        it->second += GaussianRational(pc) * fc;
        if (it->second.is_zero()) out.erase(it);
      }
  return out;
}

std::complex<double> PolarSum::operator()(std::span<const double> x) const {
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  const double r = std::sqrt(r2);
  std::complex<double> sum{};
  for (const auto& t : terms_) sum += t.p(x) * t.f(r);
  return sum;
}

PolarSum full_apply(const MultiplicityFunction& k, const Rational& a, const Sl2Element& x, const PolarSum& f) {
  if (a == 0) throw std::domain_error("full_apply: a must be nonzero");
  if (f.dimension() != k.dimension()) throw InputNotPolarForm("polar sum and root system dimensions differ");
  const int n = k.dimension();
  const Rational shift = Rational(n - 2) + 2 * k.index();
  const GaussianRational i_over_a = GaussianRational::i() * GaussianRational(Rational(1) / a);
  const DunklData<Rational> data(k);

  PolarSum out(n);
  for (const auto& [p, g] : f.terms()) {
    const PolynomialQ ep = euler_operator(p);
    const ExpMonomialQ tg = g.theta();
    if (!x.h.is_zero()) {
      PolarSum part(n);
      part.add(p, g * GaussianRational((shift + a) / a));
      part.add(ep, g * GaussianRational(Rational(2) / a));
      part.add(p, tg * GaussianRational(Rational(2) / a));
      out += part * x.h;
    }
    if (!x.ep.is_zero()) {
      out += PolarSum::product(p, g.times_power(a) * i_over_a) * x.ep;
    }
    if (!x.em.is_zero()) {
      PolarSum part(n);
      part.add(dunkl_laplacian(data, p), g.times_power(2 - a));
      part.add(ep, tg.times_power(-a) * GaussianRational(2));
      part.add(p, (tg.theta() + tg * GaussianRational(shift)).times_power(-a));
      out += part * (i_over_a * x.em);
    }
  }
  return out;
}

ExpMonomialQ radial_factorization(const MultiplicityFunction& k, const Rational& a, const Sl2Element& x,
                                  const PolynomialQ& p, int m, const ExpMonomialQ& f) {
  const DunklData<Rational> data(k);
  if (p.is_zero() || !is_k_harmonic(data, p, m)) {
    throw NotKHarmonic("radial factorization needs p in H_k^" + std::to_string(m));
  }
  return radial_apply(RadialOperatorSpec{k.dimension(), k.index(), a, m}, x, f);
}

}  // namespace kaharm
