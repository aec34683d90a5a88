#pragma once

// Exact scalars: arbitrary-precision rationals and Gaussian rationals (p + q i).

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace kaharm {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q", "p", or a plain decimal such as "0.25" into an exact rational.
Rational parse_rational(std::string_view text);

/// Inverse of parse_rational for the "p/q" form ("p" when the denominator is 1).
std::string format_rational(const Rational& q);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// Floor of a rational as a signed 64-bit value.
std::int64_t floor_to_int(const Rational& q);

/// Exact complex number with rational real and imaginary parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(implicit)
  GaussianRational(int re) : re_(re) {}                  // NOLINT(implicit)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {to_double(re_), to_double(im_)}; }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

 private:
  Rational re_{0};
  Rational im_{0};
};

// Uniform helpers so templates can treat exact and floating complex scalars alike.
inline std::complex<double> to_complex(const GaussianRational& z) { return z.to_complex(); }
inline std::complex<double> to_complex(const std::complex<double>& z) { return z; }

inline bool is_zero_scalar(const GaussianRational& z) { return z.is_zero(); }
inline bool is_zero_scalar(const std::complex<double>& z) { return z == std::complex<double>{}; }

inline GaussianRational conj_scalar(const GaussianRational& z) { return z.conj(); }
inline std::complex<double> conj_scalar(const std::complex<double>& z) { return std::conj(z); }

/// Lifts a rational into a complex scalar type.
template <typename C>
C scalar_from_rational(const Rational& q) {
  if constexpr (std::is_same_v<C, GaussianRational>) {
    return GaussianRational(q);
  } else {
    return C(to_double(q), 0.0);
  }
}

template <typename C>
C imaginary_unit() {
  if constexpr (std::is_same_v<C, GaussianRational>) {
    return GaussianRational::i();
  } else {
    return C(0.0, 1.0);
  }
}

}  // namespace kaharm
