#ifndef SPHEREMAP_HOLO_POLY_HPP
#define SPHEREMAP_HOLO_POLY_HPP

#include <complex>
#include <map>
#include <span>

#include "spheremap/multi_index.hpp"
#include "spheremap/rational.hpp"

namespace spheremap {

/// Sparse holomorphic polynomial in n complex variables with Gaussian
/// rational coefficients. Zero coefficients are never stored.
class HoloPoly {
 public:
  using Terms = std::map<MultiIndex, CplxRat>;

  HoloPoly() = default;
  explicit HoloPoly(std::size_t n) : n_(n) {}
  HoloPoly(std::size_t n, Terms terms);

  static HoloPoly constant(std::size_t n, const CplxRat& c);
  static HoloPoly monomial(std::size_t n, const MultiIndex& alpha, const CplxRat& c = CplxRat(1));
  static HoloPoly variable(std::size_t n, std::size_t i);

  std::size_t dim() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  CplxRat coeff(const MultiIndex& alpha) const;
  CplxRat constant_term() const { return coeff(MultiIndex(n_)); }

  void add_term(const MultiIndex& alpha, const CplxRat& c);

  HoloPoly homogeneous_part(int d) const;
  HoloPoly conj_coefficients() const;

  CplxRat eval(std::span<const CplxRat> z) const;
  std::complex<double> eval(std::span<const std::complex<double>> z) const;
  /// Sum of coefficient magnitudes (float), used for scale-aware tolerances.
  double coefficient_magnitude() const;

  HoloPoly& operator+=(const HoloPoly& o);
  HoloPoly& operator-=(const HoloPoly& o);
  HoloPoly& operator*=(const CplxRat& c);

  friend HoloPoly operator+(HoloPoly a, const HoloPoly& b) { return a += b; }
  friend HoloPoly operator-(HoloPoly a, const HoloPoly& b) { return a -= b; }
  friend HoloPoly operator*(HoloPoly a, const CplxRat& c) { return a *= c; }
  friend HoloPoly operator*(const HoloPoly& a, const HoloPoly& b);
  friend bool operator==(const HoloPoly& a, const HoloPoly& b) = default;

 private:
  void check_dim(const HoloPoly& o) const;

  std::size_t n_ = 0;
  Terms terms_;
};

/// p(z + c)
HoloPoly shift_center(const HoloPoly& p, std::span<const CplxRat> c);
/// p(r z)
HoloPoly scale_variables(const HoloPoly& p, const Rational& r);

}  // namespace spheremap

#endif
