#include <gencx/exactla/scalar.hpp>

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace gencx {

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  const Rational d = o.norm2();
  if (d.is_zero()) throw std::domain_error("GaussRational: division by zero");
  Rational r = (re_ * o.re_ + im_ * o.im_) / d;
  im_ = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(r);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) {
  os << to_string(z.re());
  if (!z.im().is_zero()) os << (z.im() < 0 ? "-" : "+") << to_string(boost::multiprecision::abs(z.im())) << "i";
  return os;
}

std::string to_string(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  using boost::multiprecision::mpz_int;
  const mpz_int p{std::string(num)};
  const mpz_int q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  return negative ? Rational(-r) : r;
}

}  // namespace gencx
