#include "spheremap/factory.hpp"

#include <algorithm>
#include <stdexcept>

#include "spheremap/fold.hpp"

namespace spheremap {

namespace {

void check_family_args(std::size_t n, int k, const std::vector<Rational>& radii_sq) {
  if (n < 2) throw std::invalid_argument("family constructions need n >= 2");
  if (k < 1) throw std::invalid_argument("family constructions need k >= 1");
  if (radii_sq.size() != static_cast<std::size_t>(k))
    throw std::invalid_argument("expected exactly k squared radii");
  std::vector<Rational> sorted = radii_sq;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sgn(sorted[i]) <= 0) throw std::invalid_argument("squared radii must be positive");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw std::invalid_argument("squared radii must be distinct");
  }
}

Rational power(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

HermPoly power(const HermPoly& x, int k) {
  HermPoly r = HermPoly::constant(x.dim(), 1);
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

HermPoly sphere_product(std::size_t n, const std::vector<Rational>& radii_sq) {
  HermPoly Q = HermPoly::constant(n, 1);
  for (const auto& t : radii_sq) Q = Q * HermPoly::sphere_equation(n, t);
  return Q;
}

/// (1 + ||z||^2)^e
HermPoly shifted_norm_power(std::size_t n, int e) {
  return power(HermPoly::constant(n, 1) + HermPoly::norm_sq_power(n, 1), e);
}

/// Coefficients of |z^alpha|^2 in a table that has only diagonal keys.
CoeffTable diagonal_table(const HermPoly& Q) {
  CoeffTable out;
  for (const auto& [key, c] : Q.coeffs())
    if (key.alpha == key.beta) out.emplace(key.alpha, c.re());
  return out;
}

Rational slack_constant(const CoeffTable& c_alpha) {
  Rational m = 0;
  for (const auto& [alpha, c] : c_alpha) m = std::max(m, abs(c));
  return m + 1;
}

/// Checks that the profile of f is exactly {(t, T(t))} for the requested t.
template <class Expected>
void validate_profile(const RationalMap& f, std::vector<Rational> radii_sq, Expected&& expected_T) {
  const FoldProfile prof = fold_profile(f);
  if (prof.is_infinite()) throw ValidationFailed("constructed map is an infinite-fold map");
  std::sort(radii_sq.begin(), radii_sq.end());
  if (prof.entries.size() != radii_sq.size())
    throw ValidationFailed("constructed map has " + std::to_string(prof.entries.size()) +
                           " folds, expected " + std::to_string(radii_sq.size()));
  for (std::size_t j = 0; j < radii_sq.size(); ++j) {
    const auto* t = std::get_if<Rational>(&prof.entries[j].t);
    const auto* T = std::get_if<Rational>(&prof.entries[j].T);
    if (!t || !T || *t != radii_sq[j] || *T != expected_T(radii_sq[j]))
      throw ValidationFailed("fold " + std::to_string(j + 1) + " differs from the request");
  }
}

/// Zero iff q = 1 + a.z divides Q as a polynomial in (z, conj z): substitutes
/// z_i = -(1 + sum_{j != i} a_j z_j) / a_i for some a_i != 0.
bool divisible_by_denominator(const HermPoly& Q, const std::vector<CplxRat>& a) {
  const std::size_t n = Q.dim();
  std::size_t i = 0;
  while (a[i].is_zero()) ++i;
  const CplxRat inv = CplxRat(1) / a[i];
  HoloPoly ell = HoloPoly::constant(n, -inv);
  for (std::size_t j = 0; j < n; ++j)
    if (j != i && !a[j].is_zero()) ell += HoloPoly::variable(n, j) * (-(a[j] * inv));

  std::map<HermKey, CplxRat> out;
  for (const auto& [key, c] : Q.coeffs()) {
    HoloPoly term = HoloPoly::monomial(n, key.alpha.bumped(i, -key.alpha[i]), c);
    for (int e = 0; e < key.alpha[i]; ++e) term = term * ell;
    for (const auto& [alpha, v] : term.terms()) {
      auto& slot = out[{alpha, key.beta}];
      slot += v;
    }
  }
  return std::all_of(out.begin(), out.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

}  // namespace

PolyFamilyMap poly_k_fold(std::size_t n, int k, int m, std::vector<Rational> radii_sq) {
  for (auto& t : radii_sq) t.canonicalize();
  check_family_args(n, k, radii_sq);
  if (m <= k) throw std::invalid_argument("poly_k_fold needs m > k");

  FactoryTrace tr;
  tr.Qpp = sphere_product(n, radii_sq);
  tr.c_alpha = diagonal_table(tr.Qpp);
  tr.c = slack_constant(tr.c_alpha);
  const HermPoly filler = shifted_norm_power(n, k + 1);
  tr.d_alpha = diagonal_table(filler);
  tr.Qp = HermPoly::diagonal_monomial(MultiIndex::unit(n, 0), 1 / tr.c) * tr.Qpp + filler;
  tr.Q = tr.Qp;
  tr.e_alpha = diagonal_table(tr.Qp);
  tr.f_beta = diagonal_table(HermPoly::norm_sq_power(n, m - k - 1));
  tr.substitution_note =
      "||z||^(2(k+1)) replaced by (1+||z||^2)^(k+1) so that every e_alpha is positive";

  std::vector<WeightedEntry> inner;
  for (const auto& [alpha, e] : tr.e_alpha) {
    if (sgn(e) <= 0) throw ValidationFailed("nonpositive e_alpha");
    inner.push_back({e, HoloPoly::monomial(n, alpha)});
  }
  WeightedMap p =
      map_tensor(tensor_power_of_identity(n, m - k - 1), WeightedMap(n, std::move(inner)));
  tr.Q0 = squared_norm(p);
  if (p.degree() != m) throw ValidationFailed("constructed map has the wrong degree");
  validate_profile(p, radii_sq, [&](const Rational& t) -> Rational {
    return power(t, m - k - 1) * power(Rational(1 + t), k + 1);
  });
  return {std::move(p), std::move(tr)};
}

RationalFamilyMap rational_k_fold(std::size_t n, int k, int m, std::vector<Rational> radii_sq,
                                  const std::vector<CplxRat>& a) {
  for (auto& t : radii_sq) t.canonicalize();
  check_family_args(n, k, radii_sq);
  if (m < k) throw std::invalid_argument("rational_k_fold needs m >= k");
  if (a.size() != n) throw DimensionMismatch("denominator vector has the wrong length");
  if (std::all_of(a.begin(), a.end(), [](const CplxRat& x) { return x.is_zero(); }))
    throw std::invalid_argument("denominator vector a must be nonzero");

  HoloPoly q = HoloPoly::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    if (!a[i].is_zero()) q += HoloPoly::variable(n, i) * a[i];

  FactoryTrace tr;
  tr.a = a;
  tr.Qpp = sphere_product(n, radii_sq);
  tr.c_alpha = diagonal_table(tr.Qpp);
  tr.c = slack_constant(tr.c_alpha);
  const HermPoly filler = shifted_norm_power(n, k - 1);
  tr.d_alpha = diagonal_table(filler);
  tr.Qp = (1 / tr.c) * tr.Qpp + filler;
  tr.e_alpha = diagonal_table(tr.Qp);
  tr.Q = (1 / tr.c) * tr.Qpp + squared_norm(q) * filler;
  tr.f_beta = diagonal_table(HermPoly::norm_sq_power(n, m - k));
  tr.substitution_note =
      "||z||^(2(k-1)) replaced by (1+||z||^2)^(k-1); tensor exponent m-k so the degree is m";

  if (!is_positive_definite(tr.Q, k))
    throw SlackTooLarge("positive-definiteness check failed; reduce |a|");
  if (divisible_by_denominator(tr.Qpp, a))
    throw SlackTooLarge("non-divisibility check failed; |q|^2 divides the sphere product");

  auto sos = sos_decompose(tr.Q);
  if (!std::holds_alternative<WeightedMap>(sos))
    throw InternalInvariant("positive definite table has no SOS decomposition");
  WeightedMap p = map_tensor(tensor_power_of_identity(n, m - k), std::get<WeightedMap>(sos));
  tr.Q0 = squared_norm(p);
  RationalMap f(std::move(p), std::move(q), true);
  if (f.numerator().degree() != m) throw ValidationFailed("constructed map has the wrong degree");
  if (!probably_reduced(f)) throw ValidationFailed("constructed map is not in reduced terms");
  validate_profile(f, radii_sq, [&](const Rational& t) -> Rational {
    return power(t, m - k) * power(Rational(1 + t), k - 1);
  });
  return {std::move(f), std::move(tr)};
}

}  // namespace spheremap
