#ifndef SPHEREMAP_RATIONAL_HPP
#define SPHEREMAP_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <concepts>
#include <string>
#include <string_view>

namespace spheremap {

/// Arbitrary-precision rational. GMP keeps every result in canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "num/den" or "num". The result is canonicalized; a zero denominator
/// or trailing garbage throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "num/den" in lowest terms, or "num" when the denominator is 1.
std::string format_rational(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

/// Copy in lowest terms; Rational(a, b) is not reduced on construction.
inline Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Gaussian rational re + i*im.
class CplxRat {
 public:
  CplxRat() = default;
  CplxRat(Rational re) : re_(std::move(re)) {}  // NOLINT(implicit)
  CplxRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  template <std::integral I>
  CplxRat(I re) : re_(static_cast<long>(re)) {}  // NOLINT(implicit)

  static CplxRat i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  CplxRat conj() const { return {re_, Rational(-im_)}; }
  /// |z|^2
  Rational norm_sq() const { return Rational(re_ * re_ + im_ * im_); }
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  CplxRat& operator+=(const CplxRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  CplxRat& operator-=(const CplxRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  CplxRat& operator*=(const CplxRat& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  CplxRat& operator*=(const Rational& s) {
    re_ *= s;
    im_ *= s;
    return *this;
  }
  CplxRat& operator/=(const CplxRat& o);

  friend CplxRat operator+(CplxRat a, const CplxRat& b) { return a += b; }
  friend CplxRat operator-(CplxRat a, const CplxRat& b) { return a -= b; }
  friend CplxRat operator*(CplxRat a, const CplxRat& b) { return a *= b; }
  friend CplxRat operator*(CplxRat a, const Rational& s) { return a *= s; }
  friend CplxRat operator*(const Rational& s, CplxRat a) { return a *= s; }
  friend CplxRat operator/(CplxRat a, const CplxRat& b) { return a /= b; }
  friend CplxRat operator-(const CplxRat& a) { return {Rational(-a.re_), Rational(-a.im_)}; }
  friend bool operator==(const CplxRat& a, const CplxRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline bool is_zero(const CplxRat& c) { return c.is_zero(); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

std::string format_cplx(const CplxRat& c);

}  // namespace spheremap

#endif
