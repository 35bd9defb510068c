#include "spheremap/herm_poly.hpp"

#include <cmath>

#include "spheremap/errors.hpp"

namespace spheremap {

namespace {

void check_key(const HermKey& key, std::size_t n) {
  if (key.alpha.size() != n || key.beta.size() != n)
    throw DimensionMismatch("hermitian key length differs from dimension");
}

std::complex<double> float_monomial(const MultiIndex& alpha, std::span<const std::complex<double>> z) {
  std::complex<double> v = 1.0;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] > 0) v *= std::pow(z[i], alpha[i]);
  return v;
}

}  // namespace

HermPoly::HermPoly(std::size_t n, Table coeffs) : n_(n) {
  for (auto& [key, c] : coeffs) {
    check_key(key, n);
    if (c.is_zero()) continue;
    auto mirror = coeffs.find(key.mirrored());
    if (mirror == coeffs.end() || !(mirror->second == c.conj()))
      throw std::invalid_argument("coefficient table is not hermitian");
    coeffs_.emplace(key, c);
  }
}

HermPoly HermPoly::from_trusted(std::size_t n, Table coeffs) {
  HermPoly q(n);
  for (auto& [key, c] : coeffs)
    if (!c.is_zero()) q.coeffs_.emplace(key, std::move(c));
  return q;
}

HermPoly HermPoly::constant(std::size_t n, const Rational& c) {
  HermPoly q(n);
  q.accumulate({MultiIndex(n), MultiIndex(n)}, CplxRat(c));
  return q;
}

HermPoly HermPoly::norm_sq_power(std::size_t n, int k) {
  HermPoly q(n);
  for (const auto& alpha : monomials_of_degree(n, k))
    q.accumulate({alpha, alpha}, CplxRat(Rational(multinomial(alpha))));
  return q;
}

HermPoly HermPoly::sphere_equation(std::size_t n, const Rational& t) {
  return norm_sq_power(n, 1) - constant(n, t);
}

HermPoly HermPoly::diagonal_monomial(const MultiIndex& alpha, const Rational& c) {
  HermPoly q(alpha.size());
  q.accumulate({alpha, alpha}, CplxRat(c));
  return q;
}

CplxRat HermPoly::coeff(const MultiIndex& alpha, const MultiIndex& beta) const {
  auto it = coeffs_.find({alpha, beta});
  return it == coeffs_.end() ? CplxRat() : it->second;
}

std::pair<int, int> HermPoly::bidegree() const {
  if (coeffs_.empty()) return {-1, -1};
  int a = 0;
  int b = 0;
  for (const auto& [key, c] : coeffs_) {
    a = std::max(a, key.alpha.degree());
    b = std::max(b, key.beta.degree());
  }
  return {a, b};
}

std::optional<Rational> HermPoly::constant_value() const {
  if (coeffs_.empty()) return Rational(0);
  if (coeffs_.size() == 1 && coeffs_.begin()->first.alpha.degree() == 0 &&
      coeffs_.begin()->first.beta.degree() == 0)
    return coeffs_.begin()->second.re();
  return std::nullopt;
}

Rational HermPoly::eval(std::span<const CplxRat> z) const {
  if (z.size() != n_) throw DimensionMismatch("evaluation point has wrong dimension");
  CplxRat sum;
  for (const auto& [key, c] : coeffs_) {
    CplxRat term = c;
    for (std::size_t i = 0; i < n_; ++i) {
      for (int e = 0; e < key.alpha[i]; ++e) term *= z[i];
      const CplxRat zc = z[i].conj();
      for (int e = 0; e < key.beta[i]; ++e) term *= zc;
    }
    sum += term;
  }
  return sum.re();
}

double HermPoly::eval(std::span<const std::complex<double>> z) const {
  return polarize_eval(*this, z, z).real();
}

void HermPoly::check_dim(const HermPoly& o) const {
  if (n_ != o.n_) throw DimensionMismatch("hermitian polynomials have different dimensions");
}

void HermPoly::accumulate(const HermKey& key, const CplxRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

HermPoly& HermPoly::operator+=(const HermPoly& o) {
  check_dim(o);
  for (const auto& [key, c] : o.coeffs_) accumulate(key, c);
  return *this;
}

HermPoly& HermPoly::operator-=(const HermPoly& o) {
  check_dim(o);
  for (const auto& [key, c] : o.coeffs_) accumulate(key, -c);
  return *this;
}

HermPoly& HermPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [key, c] : coeffs_) c *= s;
  return *this;
}

HermPoly operator*(const HermPoly& a, const HermPoly& b) {
  a.check_dim(b);
  HermPoly out(a.n_);
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_)
      out.accumulate({ka.alpha + kb.alpha, ka.beta + kb.beta}, ca * cb);
  return out;
}

HermPoly squared_norm(const WeightedMap& p) {
  HermPoly::Table table;
  for (const auto& e : p.entries()) {
    for (const auto& [a, ca] : e.poly.terms()) {
      for (const auto& [b, cb] : e.poly.terms()) {
        CplxRat v = ca * cb.conj() * e.weight;
        auto [it, inserted] = table.try_emplace({a, b}, v);
        if (!inserted) it->second += v;
      }
    }
  }
  return HermPoly::from_trusted(p.dim(), std::move(table));
}

HermPoly squared_norm(const HoloPoly& q) { return squared_norm(WeightedMap(PolyMap(q.dim(), {q}))); }

HermPoly homogeneous_part(const HermPoly& Q, int d) {
  if (d < 0) throw std::invalid_argument("homogeneous part needs d >= 0");
  HermPoly::Table table;
  for (const auto& [key, c] : Q.coeffs())
    if (key.alpha.degree() == d && key.beta.degree() == d) table.emplace(key, c);
  return HermPoly::from_trusted(Q.dim(), std::move(table));
}

std::complex<double> polarize_eval(const HermPoly& Q, std::span<const std::complex<double>> z,
                                   std::span<const std::complex<double>> w) {
  if (z.size() != Q.dim() || w.size() != Q.dim())
    throw DimensionMismatch("polarization points have wrong dimension");
  std::vector<std::complex<double>> wc(w.begin(), w.end());
  for (auto& x : wc) x = std::conj(x);
  std::complex<double> sum = 0.0;
  for (const auto& [key, c] : Q.coeffs())
    sum += c.to_complex() * float_monomial(key.alpha, z) * float_monomial(key.beta, wc);
  return sum;
}

}  // namespace spheremap
