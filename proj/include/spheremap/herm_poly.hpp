#ifndef SPHEREMAP_HERM_POLY_HPP
#define SPHEREMAP_HERM_POLY_HPP

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <utility>

#include "spheremap/holo_poly.hpp"
#include "spheremap/maps.hpp"

namespace spheremap {

/// Index (alpha, beta) of the monomial z^alpha conj(z)^beta.
struct HermKey {
  MultiIndex alpha;
  MultiIndex beta;

  HermKey mirrored() const { return {beta, alpha}; }
  friend bool operator==(const HermKey&, const HermKey&) = default;
  friend std::strong_ordering operator<=>(const HermKey&, const HermKey&) = default;
};

template <class Coeff>
using HermTable = std::map<HermKey, Coeff>;

/// Real-valued polynomial Q(z, conj z) = sum c(alpha,beta) z^alpha conj(z)^beta
/// with c(beta,alpha) = conj(c(alpha,beta)).
///
/// The public constructor rejects asymmetric tables instead of symmetrizing
/// them. All arithmetic below preserves the symmetry.
class HermPoly {
 public:
  using Table = HermTable<CplxRat>;

  explicit HermPoly(std::size_t n = 0) : n_(n) {}
  HermPoly(std::size_t n, Table coeffs);

  static HermPoly constant(std::size_t n, const Rational& c);
  /// ||z||^(2k)
  static HermPoly norm_sq_power(std::size_t n, int k);
  /// ||z||^2 - t
  static HermPoly sphere_equation(std::size_t n, const Rational& t);
  /// |z^alpha|^2 scaled by c
  static HermPoly diagonal_monomial(const MultiIndex& alpha, const Rational& c);

  std::size_t dim() const { return n_; }
  const Table& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  CplxRat coeff(const MultiIndex& alpha, const MultiIndex& beta) const;
  /// (max |alpha|, max |beta|); (-1, -1) for zero.
  std::pair<int, int> bidegree() const;
  /// Value when Q is a constant polynomial (including 0).
  std::optional<Rational> constant_value() const;

  /// Exact Q(z, conj z).
  Rational eval(std::span<const CplxRat> z) const;
  double eval(std::span<const std::complex<double>> z) const;

  HermPoly& operator+=(const HermPoly& o);
  HermPoly& operator-=(const HermPoly& o);
  HermPoly& operator*=(const Rational& s);

  friend HermPoly operator+(HermPoly a, const HermPoly& b) { return a += b; }
  friend HermPoly operator-(HermPoly a, const HermPoly& b) { return a -= b; }
  friend HermPoly operator*(HermPoly a, const Rational& s) { return a *= s; }
  friend HermPoly operator*(const Rational& s, HermPoly a) { return a *= s; }
  friend HermPoly operator*(const HermPoly& a, const HermPoly& b);
  friend bool operator==(const HermPoly&, const HermPoly&) = default;

  /// Builds from a table already known to be hermitian (no symmetry check).
  static HermPoly from_trusted(std::size_t n, Table coeffs);

 private:
  void check_dim(const HermPoly& o) const;
  void accumulate(const HermKey& key, const CplxRat& c);

  std::size_t n_ = 0;
  Table coeffs_;
};

/// Hermitian table of sum_j w_j |p_j(z)|^2.
HermPoly squared_norm(const WeightedMap& p);
HermPoly squared_norm(const HoloPoly& q);

inline HermPoly herm_add(const HermPoly& a, const HermPoly& b) { return a + b; }
inline HermPoly herm_mul(const HermPoly& a, const HermPoly& b) { return a * b; }
inline HermPoly herm_scale(const HermPoly& a, const Rational& c) { return a * c; }

/// Keeps exactly the keys with |alpha| = |beta| = d.
HermPoly homogeneous_part(const HermPoly& Q, int d);

/// sum c(alpha,beta) z^alpha conj(w)^beta
std::complex<double> polarize_eval(const HermPoly& Q, std::span<const std::complex<double>> z,
                                   std::span<const std::complex<double>> w);

}  // namespace spheremap

#endif
