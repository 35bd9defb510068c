#ifndef SPHEREMAP_UPOLY_HPP
#define SPHEREMAP_UPOLY_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "spheremap/rational.hpp"

namespace spheremap {

/// Dense univariate polynomial over an exact field F (Rational or CplxRat).
/// Coefficients are stored low degree first with no trailing zeros.
template <class F>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const F& a) { return UPoly(std::vector<F>{a}); }
  /// The indeterminate x.
  static UPoly x() { return UPoly(std::vector<F>{F(0), F(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : F(0); }
  const F& lead() const { return c_.back(); }

  F eval(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UPoly derivative() const {
    std::vector<F> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * F(static_cast<long>(i)));
    return UPoly(std::move(d));
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    UPoly r = *this;
    const F l = lead();
    for (auto& a : r.c_) a = a / l;
    return r;
  }

  /// Multiplies by x.
  UPoly shifted() const {
    if (is_zero()) return *this;
    std::vector<F> d;
    d.reserve(c_.size() + 1);
    d.push_back(F(0));
    d.insert(d.end(), c_.begin(), c_.end());
    return UPoly(std::move(d));
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator*=(const F& s) {
    for (auto& a : c_) a *= s;
    trim();
    return *this;
  }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(const UPoly& a) { return UPoly() - a; }
  friend UPoly operator*(UPoly a, const F& s) { return a *= s; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<F> out(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(out));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<F> rem = a.c_;
    const int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<F> quot(static_cast<std::size_t>(a.degree() - db + 1), F(0));
    for (int k = a.degree(); k >= db; --k) {
      const F f = rem[k] / b.lead();
      quot[k - db] = f;
      if (spheremap::is_zero(f)) continue;
      for (int i = 0; i <= db; ++i) rem[k - db + i] -= f * b.c_[i];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
  }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

  /// Monic gcd; gcd(0, 0) = 0.
  friend UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = a % b;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

 private:
  void trim() {
    while (!c_.empty() && spheremap::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

using RatPoly = UPoly<Rational>;

}  // namespace spheremap

#endif
