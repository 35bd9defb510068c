#include "spheremap/holo_poly.hpp"

#include <cmath>
#include <vector>

#include "spheremap/errors.hpp"

namespace spheremap {

HoloPoly::HoloPoly(std::size_t n, Terms terms) : n_(n) {
  for (auto& [alpha, c] : terms) {
    if (alpha.size() != n) throw DimensionMismatch("monomial length differs from polynomial dimension");
    if (!c.is_zero()) terms_.emplace(alpha, std::move(c));
  }
}

HoloPoly HoloPoly::constant(std::size_t n, const CplxRat& c) {
  HoloPoly p(n);
  p.add_term(MultiIndex(n), c);
  return p;
}

HoloPoly HoloPoly::monomial(std::size_t n, const MultiIndex& alpha, const CplxRat& c) {
  if (alpha.size() != n) throw DimensionMismatch("monomial length differs from polynomial dimension");
  HoloPoly p(n);
  p.add_term(alpha, c);
  return p;
}

HoloPoly HoloPoly::variable(std::size_t n, std::size_t i) {
  return monomial(n, MultiIndex::unit(n, i));
}

int HoloPoly::degree() const {
  int d = -1;
  for (const auto& [alpha, c] : terms_) d = std::max(d, alpha.degree());
  return d;
}

CplxRat HoloPoly::coeff(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? CplxRat() : it->second;
}

void HoloPoly::add_term(const MultiIndex& alpha, const CplxRat& c) {
  if (alpha.size() != n_) throw DimensionMismatch("monomial length differs from polynomial dimension");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HoloPoly HoloPoly::homogeneous_part(int d) const {
  HoloPoly out(n_);
  for (const auto& [alpha, c] : terms_)
    if (alpha.degree() == d) out.terms_.emplace(alpha, c);
  return out;
}

HoloPoly HoloPoly::conj_coefficients() const {
  HoloPoly out(n_);
  for (const auto& [alpha, c] : terms_) out.terms_.emplace(alpha, c.conj());
  return out;
}

CplxRat HoloPoly::eval(std::span<const CplxRat> z) const {
  if (z.size() != n_) throw DimensionMismatch("evaluation point has wrong dimension");
  CplxRat sum;
  for (const auto& [alpha, c] : terms_) {
    CplxRat term = c;
    for (std::size_t i = 0; i < n_; ++i)
      for (int e = 0; e < alpha[i]; ++e) term *= z[i];
    sum += term;
  }
  return sum;
}

std::complex<double> HoloPoly::eval(std::span<const std::complex<double>> z) const {
  if (z.size() != n_) throw DimensionMismatch("evaluation point has wrong dimension");
  std::complex<double> sum = 0.0;
  for (const auto& [alpha, c] : terms_) {
    std::complex<double> term = c.to_complex();
    for (std::size_t i = 0; i < n_; ++i)
      if (alpha[i] > 0) term *= std::pow(z[i], alpha[i]);
    sum += term;
  }
  return sum;
}

double HoloPoly::coefficient_magnitude() const {
  double s = 0.0;
  for (const auto& [alpha, c] : terms_) s += std::abs(c.to_complex());
  return s;
}

void HoloPoly::check_dim(const HoloPoly& o) const {
  if (n_ != o.n_) throw DimensionMismatch("holomorphic polynomials have different dimensions");
}

HoloPoly& HoloPoly::operator+=(const HoloPoly& o) {
  check_dim(o);
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
  return *this;
}

HoloPoly& HoloPoly::operator-=(const HoloPoly& o) {
  check_dim(o);
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
  return *this;
}

HoloPoly& HoloPoly::operator*=(const CplxRat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, c] : terms_) c *= s;
  return *this;
}

HoloPoly operator*(const HoloPoly& a, const HoloPoly& b) {
  a.check_dim(b);
  HoloPoly out(a.n_);
  for (const auto& [x, cx] : a.terms_)
    for (const auto& [y, cy] : b.terms_) out.add_term(x + y, cx * cy);
  return out;
}

HoloPoly shift_center(const HoloPoly& p, std::span<const CplxRat> c) {
  const std::size_t n = p.dim();
  if (c.size() != n) throw DimensionMismatch("shift vector has wrong dimension");
  // powers[i][e] = (z_i + c_i)^e, built lazily up to the largest exponent used
  std::vector<std::vector<HoloPoly>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    powers[i].push_back(HoloPoly::constant(n, CplxRat(1)));
  }
  auto power = [&](std::size_t i, int e) -> const HoloPoly& {
    auto& row = powers[i];
    const HoloPoly linear = HoloPoly::variable(n, i) + HoloPoly::constant(n, c[i]);
    while (static_cast<int>(row.size()) <= e) row.push_back(row.back() * linear);
    return row[static_cast<std::size_t>(e)];
  };
  HoloPoly out(n);
  for (const auto& [alpha, coef] : p.terms()) {
    HoloPoly term = HoloPoly::constant(n, coef);
    for (std::size_t i = 0; i < n; ++i)
      if (alpha[i] > 0) term = term * power(i, alpha[i]);
    out += term;
  }
  return out;
}

HoloPoly scale_variables(const HoloPoly& p, const Rational& r) {
  HoloPoly::Terms terms;
  for (const auto& [alpha, c] : p.terms()) {
    Rational f = 1;
    for (int e = 0; e < alpha.degree(); ++e) f *= r;
    terms.emplace(alpha, c * f);
  }
  return HoloPoly(p.dim(), std::move(terms));
}

}  // namespace spheremap
