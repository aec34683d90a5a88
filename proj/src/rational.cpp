#include "kaharm/rational.hpp"

#include <cctype>
#include <sstream>

#include "kaharm/errors.hpp"

namespace kaharm {

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ParseError("empty integer in rational '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw ParseError("malformed rational '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (s[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(trim(s.substr(0, slash)), text);
    const BigInt den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    const std::string_view frac = s.substr(dot + 1);
    bool negative = !int_part.empty() && int_part[0] == '-';
    if (!int_part.empty() && (int_part[0] == '-' || int_part[0] == '+')) int_part.remove_prefix(1);
    BigInt whole = int_part.empty() ? BigInt(0) : parse_integer(int_part, text);
    BigInt frac_value = frac.empty() ? BigInt(0) : parse_integer(frac, text);
    if (!frac.empty() && (frac[0] == '-' || frac[0] == '+')) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational value = Rational(whole) + Rational(frac_value, scale);
    return negative ? Rational(-value) : value;
  }
  return Rational(parse_integer(s, text));
}

std::string format_rational(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1) os << '/' << boost::multiprecision::denominator(q);
  return os.str();
}

std::int64_t floor_to_int(const Rational& q) {
  const BigInt& num = boost::multiprecision::numerator(q);
  const BigInt& den = boost::multiprecision::denominator(q);
  BigInt quotient = num / den;  // truncates toward zero
  if (num < 0 && quotient * den != num) quotient -= 1;
  return quotient.convert_to<std::int64_t>();
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational denom = o.re_ * o.re_ + o.im_ * o.im_;
  if (denom == 0) throw std::domain_error("GaussianRational: division by zero");
  Rational re = (re_ * o.re_ + im_ * o.im_) / denom;
  im_ = (im_ * o.re_ - re_ * o.im_) / denom;
  re_ = std::move(re);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  os << format_rational(z.re_);
  if (z.im_ != 0) os << (z.im_ > 0 ? "+" : "-") << format_rational(abs(z.im_)) << "i";
  return os;
}

}  // namespace kaharm
