#include <map>
#include <set>

#include "spheremap/factory.hpp"

namespace spheremap {

namespace {

using Matrix = std::vector<std::vector<CplxRat>>;

std::map<MultiIndex, std::size_t> positions(const std::vector<MultiIndex>& basis) {
  std::map<MultiIndex, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], i);
  return pos;
}

/// C_ij = coeff(alpha_j, alpha_i), so that Q(z) = m(z)* C m(z) for the
/// monomial vector m.
Matrix coefficient_matrix(const HermPoly& Q, const std::vector<MultiIndex>& basis) {
  const auto pos = positions(basis);
  Matrix C(basis.size(), std::vector<CplxRat>(basis.size()));
  for (const auto& [key, c] : Q.coeffs()) C[pos.at(key.beta)][pos.at(key.alpha)] = c;
  return C;
}

struct Elimination {
  std::vector<std::size_t> order;
  std::vector<Rational> pivots;
  /// L column of each pivot (full length, unit at the pivot)
  std::vector<std::vector<CplxRat>> columns;
  /// vector on the uneliminated indices with y* S y < 0 for the Schur complement S
  std::optional<std::vector<CplxRat>> schur_witness;
};

Elimination eliminate(Matrix A) {
  const std::size_t N = A.size();
  std::vector<bool> active(N, true);
  Elimination out;
  while (true) {
    std::optional<std::size_t> neg, pos;
    for (std::size_t i = 0; i < N; ++i) {
      if (!active[i]) continue;
      const Rational& d = A[i][i].re();
      if (sgn(d) < 0 && (!neg || d < A[*neg][*neg].re())) neg = i;
      if (sgn(d) > 0 && (!pos || d > A[*pos][*pos].re())) pos = i;
    }
    if (neg) {
      std::vector<CplxRat> y(N);
      y[*neg] = CplxRat(1);
      out.schur_witness = std::move(y);
      return out;
    }
    if (!pos) {
      // zero diagonal: any nonzero off-diagonal entry makes S indefinite
      for (std::size_t p = 0; p < N; ++p) {
        if (!active[p]) continue;
        for (std::size_t q = 0; q < N; ++q) {
          if (q == p || !active[q] || A[p][q].is_zero()) continue;
          std::vector<CplxRat> y(N);
          CplxRat s = -A[p][q];
          s *= Rational(1 / A[p][q].norm_sq());
          y[p] = s;
          y[q] = CplxRat(1);
          out.schur_witness = std::move(y);
          return out;
        }
      }
      return out;
    }
    const std::size_t p = *pos;
    const Rational d = A[p][p].re();
    const Rational inv = 1 / d;
    std::vector<CplxRat> col(N);
    col[p] = CplxRat(1);
    for (std::size_t i = 0; i < N; ++i)
      if (active[i] && i != p && !A[i][p].is_zero()) col[i] = A[i][p] * inv;
    for (std::size_t i = 0; i < N; ++i) {
      if (!active[i] || i == p || col[i].is_zero()) continue;
      for (std::size_t j = 0; j < N; ++j) {
        if (!active[j] || j == p || A[p][j].is_zero()) continue;
        A[i][j] -= col[i] * A[p][j];
      }
    }
    active[p] = false;
    out.order.push_back(p);
    out.pivots.push_back(d);
    out.columns.push_back(std::move(col));
  }
}

/// Extends a Schur-complement witness y to x with (L* x)_p = 0 on every
/// eliminated pivot, so that x* C x = y* S y.
std::vector<CplxRat> lift(const Elimination& e, std::vector<CplxRat> x) {
  for (std::size_t k = e.order.size(); k-- > 0;) {
    const std::size_t p = e.order[k];
    CplxRat acc;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (i != p && !e.columns[k][i].is_zero()) acc += e.columns[k][i].conj() * x[i];
    x[p] = -acc;
  }
  return x;
}

std::vector<MultiIndex> key_basis(const HermPoly& Q) {
  std::set<MultiIndex> s;
  for (const auto& [key, c] : Q.coeffs()) {
    s.insert(key.alpha);
    s.insert(key.beta);
  }
  return {s.begin(), s.end()};
}

}  // namespace

WeightedMap homogeneous_map(std::size_t n, int d, const Rational& scale_sq) {
  if (d < 0) throw std::invalid_argument("homogeneous_map needs d >= 0");
  if (sgn(scale_sq) <= 0) throw std::invalid_argument("homogeneous_map needs scale_sq > 0");
  std::vector<WeightedEntry> entries;
  for (const auto& alpha : monomials_of_degree(n, d))
    entries.push_back({scale_sq * Rational(multinomial(alpha)), HoloPoly::monomial(n, alpha)});
  return WeightedMap(n, std::move(entries));
}

Rational hermitian_form_value(const HermPoly& Q, const std::vector<MultiIndex>& basis,
                              const std::vector<CplxRat>& x) {
  const auto pos = positions(basis);
  CplxRat acc;
  for (const auto& [key, c] : Q.coeffs()) {
    const auto i = pos.find(key.beta);
    const auto j = pos.find(key.alpha);
    if (i == pos.end() || j == pos.end()) continue;
    acc += x[i->second].conj() * c * x[j->second];
  }
  if (!acc.is_real()) throw InternalInvariant("hermitian form value is not real");
  return acc.re();
}

SosResult sos_decompose(const HermPoly& Q) {
  const auto basis = key_basis(Q);
  const Elimination e = eliminate(coefficient_matrix(Q, basis));
  if (e.schur_witness) {
    NotPSDWitness w{basis, lift(e, *e.schur_witness), Rational(0)};
    w.value = hermitian_form_value(Q, basis, w.vector);
    if (sgn(w.value) >= 0) throw InternalInvariant("indefiniteness witness has nonnegative value");
    return w;
  }
  std::vector<WeightedEntry> entries;
  for (std::size_t k = 0; k < e.order.size(); ++k) {
    HoloPoly v(Q.dim());
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!e.columns[k][i].is_zero()) v.add_term(basis[i], e.columns[k][i].conj());
    entries.push_back({e.pivots[k], std::move(v)});
  }
  return WeightedMap(Q.dim(), std::move(entries));
}

bool is_positive_definite(const HermPoly& Q, int k) {
  std::set<MultiIndex> s;
  for (const auto& alpha : monomials_up_to_degree(Q.dim(), k)) s.insert(alpha);
  for (const auto& alpha : key_basis(Q)) s.insert(alpha);
  const std::vector<MultiIndex> basis(s.begin(), s.end());
  const Elimination e = eliminate(coefficient_matrix(Q, basis));
  return !e.schur_witness && e.order.size() == basis.size();
}

}  // namespace spheremap
