#ifndef SPHEREMAP_MAPS_HPP
#define SPHEREMAP_MAPS_HPP

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "spheremap/holo_poly.hpp"

namespace spheremap {

/// Holomorphic polynomial map C^n -> C^N.
class PolyMap {
 public:
  PolyMap() = default;
  PolyMap(std::size_t n, std::vector<HoloPoly> components);

  /// N zero components; the zero map keeps explicit slots.
  static PolyMap zero(std::size_t n, std::size_t N);
  static PolyMap identity(std::size_t n);

  std::size_t dim() const { return n_; }
  std::size_t target_dim() const { return components_.size(); }
  const std::vector<HoloPoly>& components() const { return components_; }
  int degree() const;

  friend bool operator==(const PolyMap&, const PolyMap&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<HoloPoly> components_;
};

struct WeightedEntry {
  /// Squared weight; the component is sqrt(weight) * poly.
  Rational weight;
  HoloPoly poly;

  friend bool operator==(const WeightedEntry&, const WeightedEntry&) = default;
};

/// Polynomial map whose j-th component is sqrt(weight_j) * poly_j. Only the
/// squared weight is stored so that all squared-norm algebra stays rational.
class WeightedMap {
 public:
  WeightedMap() = default;
  WeightedMap(std::size_t n, std::vector<WeightedEntry> entries);
  WeightedMap(const PolyMap& p);  // NOLINT(implicit): unit weights

  std::size_t dim() const { return n_; }
  std::size_t target_dim() const { return entries_.size(); }
  const std::vector<WeightedEntry>& entries() const { return entries_; }
  int degree() const;
  bool has_unit_weights() const;

  friend bool operator==(const WeightedMap&, const WeightedMap&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<WeightedEntry> entries_;
};

/// f = numerator / denominator with a scalar holomorphic denominator.
class RationalMap {
 public:
  RationalMap() = default;
  RationalMap(WeightedMap numerator, HoloPoly denominator, bool reduced_claimed = false);
  RationalMap(const WeightedMap& polynomial);  // NOLINT(implicit): denominator 1
  RationalMap(const PolyMap& polynomial) : RationalMap(WeightedMap(polynomial)) {}  // NOLINT

  std::size_t dim() const { return numerator_.dim(); }
  std::size_t target_dim() const { return numerator_.target_dim(); }
  const WeightedMap& numerator() const { return numerator_; }
  const HoloPoly& denominator() const { return denominator_; }
  bool reduced_claimed() const { return reduced_claimed_; }
  /// Denominator is a nonzero constant.
  bool is_polynomial() const { return denominator_.degree() == 0; }

  /// Throws PreconditionError unless denominator(0) != 0.
  void require_regular_at_origin() const;

  friend bool operator==(const RationalMap&, const RationalMap&) = default;

 private:
  WeightedMap numerator_;
  HoloPoly denominator_;
  bool reduced_claimed_ = false;
};

/// Pairwise products of components (p_i * q_j, i-major); squared norms multiply.
WeightedMap map_tensor(const WeightedMap& p, const WeightedMap& q);
/// Concatenation of components; squared norms add.
WeightedMap map_direct_sum(const WeightedMap& p, const WeightedMap& q);
/// z tensored with itself k times (n^k components, unit weights).
WeightedMap tensor_power_of_identity(std::size_t n, int k);

/// Exact sum_j weight_j |poly_j(z)|^2.
Rational eval_norm_sq(const WeightedMap& p, std::span<const CplxRat> z);

/// Componentwise float value of f at z. Throws PoleProximity when the
/// denominator is within 1e-14 of zero relative to its coefficient scale.
std::vector<std::complex<double>> eval_float(const RationalMap& f,
                                             std::span<const std::complex<double>> z);

/// z -> F(r z) with all weights divided by R_sq.
RationalMap rescale(const RationalMap& F, const Rational& r, const Rational& R_sq);

PolyMap shift_center(const PolyMap& p, std::span<const CplxRat> c);

/// The numerator over a constant denominator c as a weighted map:
/// (w, p) becomes (w / |c|^4, conj(c) p). Empty when the denominator is not
/// constant.
std::optional<WeightedMap> as_polynomial(const RationalMap& f);

}  // namespace spheremap

#endif
