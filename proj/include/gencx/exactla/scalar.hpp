#pragma once

// Exact scalar fields used throughout gencx: the rationals Q and the
// Gaussian rationals Q(i). Both plug into Eigen as custom scalar types.

#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace gencx {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator (GMP's mpq canonical form).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// An element re + i*im of Q(i).
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(int value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  // Spellings expected by Eigen's numext.
  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  GaussRational conj() const { return {re_, -im_}; }
  /// |z|^2 = re^2 + im^2.
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  bool is_real() const { return im_ == 0; }

  GaussRational operator-() const { return {-re_, -im_}; }

  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

// ADL hooks picked up by Eigen's numext for complex scalars.
inline Rational real(const GaussRational& z) { return z.re(); }
inline Rational imag(const GaussRational& z) { return z.im(); }
inline GaussRational conj(const GaussRational& z) { return z.conj(); }
inline Rational abs2(const GaussRational& z) { return z.norm2(); }

std::ostream& operator<<(std::ostream& os, const GaussRational& z);

/// Field-generic operations needed by the subspace calculus.
template <class S>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr bool is_complex = false;
  static constexpr const char* tag = "Q";
  static Rational conj(const Rational& x) { return x; }
  static Rational re(const Rational& x) { return x; }
  static Rational im(const Rational&) { return Rational(0); }
};

template <>
struct FieldTraits<GaussRational> {
  static constexpr bool is_complex = true;
  static constexpr const char* tag = "Qi";
  static GaussRational conj(const GaussRational& x) { return x.conj(); }
  static Rational re(const GaussRational& x) { return x.re(); }
  static Rational im(const GaussRational& x) { return x.im(); }
};

template <class S>
inline constexpr bool is_complex_field_v = FieldTraits<S>::is_complex;

/// "p/q" or "p"; the denominator is omitted when it is one.
std::string to_string(const Rational& q);
/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace gencx

namespace Eigen {

template <>
struct NumTraits<gencx::GaussRational> : GenericNumTraits<gencx::GaussRational> {
  using Real = gencx::Rational;
  using NonInteger = gencx::GaussRational;
  using Nested = gencx::GaussRational;
  using Literal = gencx::GaussRational;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 32,
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
