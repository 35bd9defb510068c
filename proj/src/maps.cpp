#include "spheremap/maps.hpp"

#include <cmath>

#include "spheremap/errors.hpp"

namespace spheremap {

PolyMap::PolyMap(std::size_t n, std::vector<HoloPoly> components)
    : n_(n), components_(std::move(components)) {
  for (const auto& c : components_)
    if (c.dim() != n_) throw DimensionMismatch("map component has wrong source dimension");
}

PolyMap PolyMap::zero(std::size_t n, std::size_t N) {
  return PolyMap(n, std::vector<HoloPoly>(N, HoloPoly(n)));
}

PolyMap PolyMap::identity(std::size_t n) {
  std::vector<HoloPoly> comps;
  for (std::size_t i = 0; i < n; ++i) comps.push_back(HoloPoly::variable(n, i));
  return PolyMap(n, std::move(comps));
}

int PolyMap::degree() const {
  int d = -1;
  for (const auto& c : components_) d = std::max(d, c.degree());
  return d;
}

WeightedMap::WeightedMap(std::size_t n, std::vector<WeightedEntry> entries)
    : n_(n), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (sgn(e.weight) <= 0) throw std::invalid_argument("weights must be positive");
    if (e.poly.dim() != n_) throw DimensionMismatch("map component has wrong source dimension");
  }
}

WeightedMap::WeightedMap(const PolyMap& p) : n_(p.dim()) {
  for (const auto& c : p.components()) entries_.push_back({Rational(1), c});
}

int WeightedMap::degree() const {
  int d = -1;
  for (const auto& e : entries_) d = std::max(d, e.poly.degree());
  return d;
}

bool WeightedMap::has_unit_weights() const {
  for (const auto& e : entries_)
    if (e.weight != 1) return false;
  return true;
}

RationalMap::RationalMap(WeightedMap numerator, HoloPoly denominator, bool reduced_claimed)
    : numerator_(std::move(numerator)),
      denominator_(std::move(denominator)),
      reduced_claimed_(reduced_claimed) {
  if (denominator_.dim() != numerator_.dim())
    throw DimensionMismatch("denominator and numerator have different source dimensions");
  if (denominator_.is_zero()) throw std::invalid_argument("denominator is identically zero");
}

RationalMap::RationalMap(const WeightedMap& polynomial)
    : numerator_(polynomial),
      denominator_(HoloPoly::constant(polynomial.dim(), CplxRat(1))),
      reduced_claimed_(true) {}

void RationalMap::require_regular_at_origin() const {
  if (denominator_.constant_term().is_zero())
    throw PreconditionError("denominator vanishes at the origin");
}

WeightedMap map_tensor(const WeightedMap& p, const WeightedMap& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("tensor of maps with different source dimensions");
  std::vector<WeightedEntry> out;
  out.reserve(p.target_dim() * q.target_dim());
  for (const auto& a : p.entries())
    for (const auto& b : q.entries()) out.push_back({Rational(a.weight * b.weight), a.poly * b.poly});
  return WeightedMap(p.dim(), std::move(out));
}

WeightedMap map_direct_sum(const WeightedMap& p, const WeightedMap& q) {
  if (p.dim() != q.dim())
    throw DimensionMismatch("direct sum of maps with different source dimensions");
  std::vector<WeightedEntry> out = p.entries();
  out.insert(out.end(), q.entries().begin(), q.entries().end());
  return WeightedMap(p.dim(), std::move(out));
}

WeightedMap tensor_power_of_identity(std::size_t n, int k) {
  WeightedMap acc = PolyMap(n, {HoloPoly::constant(n, CplxRat(1))});
  const WeightedMap z = PolyMap::identity(n);
  for (int i = 0; i < k; ++i) acc = map_tensor(acc, z);
  return acc;
}

Rational eval_norm_sq(const WeightedMap& p, std::span<const CplxRat> z) {
  Rational sum = 0;
  for (const auto& e : p.entries()) sum += e.weight * e.poly.eval(z).norm_sq();
  return sum;
}

std::vector<std::complex<double>> eval_float(const RationalMap& f,
                                             std::span<const std::complex<double>> z) {
  const std::complex<double> q = f.denominator().eval(z);
  double scale = 1.0;
  for (const auto& x : z) scale = std::max(scale, std::abs(x));
  const double guard =
      1e-14 * f.denominator().coefficient_magnitude() * std::pow(scale, std::max(0, f.denominator().degree()));
  if (std::abs(q) <= guard) throw PoleProximity("denominator vanishes at evaluation point");
  std::vector<std::complex<double>> out;
  out.reserve(f.target_dim());
  for (const auto& e : f.numerator().entries())
    out.push_back(std::sqrt(to_double(e.weight)) * e.poly.eval(z) / q);
  return out;
}

RationalMap rescale(const RationalMap& F, const Rational& r, const Rational& R_sq) {
  if (sgn(r) <= 0 || sgn(R_sq) <= 0) throw std::invalid_argument("rescale needs positive r and R_sq");
  std::vector<WeightedEntry> entries;
  for (const auto& e : F.numerator().entries())
    entries.push_back({Rational(e.weight / R_sq), scale_variables(e.poly, r)});
  return RationalMap(WeightedMap(F.dim(), std::move(entries)), scale_variables(F.denominator(), r),
                     F.reduced_claimed());
}

PolyMap shift_center(const PolyMap& p, std::span<const CplxRat> c) {
  std::vector<HoloPoly> comps;
  for (const auto& comp : p.components()) comps.push_back(shift_center(comp, c));
  return PolyMap(p.dim(), std::move(comps));
}

std::optional<WeightedMap> as_polynomial(const RationalMap& f) {
  if (f.denominator().degree() != 0) return std::nullopt;
  const CplxRat c = f.denominator().constant_term();
  if (c == CplxRat(1)) return f.numerator();
  const Rational c2 = c.norm_sq();
  std::vector<WeightedEntry> entries;
  for (const auto& e : f.numerator().entries())
    entries.push_back({Rational(e.weight / (c2 * c2)), e.poly * c.conj()});
  return WeightedMap(f.dim(), std::move(entries));
}

}  // namespace spheremap
