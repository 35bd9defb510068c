#ifndef SPHEREMAP_TESTS_SUPPORT_HPP
#define SPHEREMAP_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spheremap/factory.hpp"
#include "spheremap/herm_poly.hpp"
#include "spheremap/maps.hpp"
#include "spheremap/multi_index.hpp"

namespace spheremap::testing {

/// Seeded generator of small exact objects for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(int range = 5, int max_den = 4) {
    Rational q(integer(-range, range), integer(1, max_den));
    q.canonicalize();
    return q;
  }
  Rational positive_rational(int range = 5, int max_den = 4) {
    Rational q(integer(1, range), integer(1, max_den));
    q.canonicalize();
    return q;
  }
  CplxRat cplx(int range = 5, int max_den = 4) {
    Rational re = rational(range, max_den);
    return {re, rational(range, max_den)};
  }

  std::vector<CplxRat> point(std::size_t n, int range = 3) {
    std::vector<CplxRat> z;
    for (std::size_t i = 0; i < n; ++i) z.push_back(cplx(range));
    return z;
  }

  MultiIndex index(std::size_t n, int max_degree) {
    std::vector<int> e(n, 0);
    const int d = integer(0, max_degree);
    for (int k = 0; k < d; ++k) ++e[static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1))];
    return MultiIndex(e);
  }

  HoloPoly holo(std::size_t n, int max_degree, int max_terms = 4) {
    HoloPoly p(n);
    const int terms = integer(1, max_terms);
    for (int k = 0; k < terms; ++k) p.add_term(index(n, max_degree), cplx());
    return p;
  }

  WeightedMap weighted_map(std::size_t n, std::size_t N, int max_degree) {
    std::vector<WeightedEntry> entries;
    for (std::size_t j = 0; j < N; ++j) entries.push_back({positive_rational(), holo(n, max_degree)});
    return WeightedMap(n, std::move(entries));
  }

  /// Random hermitian table: each drawn key is paired with its mirror.
  HermPoly herm(std::size_t n, int max_bidegree, int max_terms = 8) {
    HermPoly::Table table;
    const int terms = integer(1, max_terms);
    for (int k = 0; k < terms; ++k) {
      const MultiIndex a = index(n, max_bidegree);
      const MultiIndex b = index(n, max_bidegree);
      CplxRat c = a == b ? CplxRat(rational()) : cplx();
      table[{a, b}] += c;
      if (!(a == b)) table[{b, a}] += c.conj();
    }
    std::erase_if(table, [](const auto& kv) { return kv.second.is_zero(); });
    return HermPoly(n, std::move(table));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Weighted monomial map sum e_alpha |z^alpha|^2 from a diagonal table.
inline WeightedMap diagonal_map(const HermPoly& Q) {
  std::vector<WeightedEntry> entries;
  for (const auto& [key, c] : Q.coeffs()) {
    if (!(key.alpha == key.beta)) continue;
    entries.push_back({c.re(), HoloPoly::monomial(Q.dim(), key.alpha)});
  }
  return WeightedMap(Q.dim(), std::move(entries));
}

/// Applies a random signed permutation with quarter-turn phases (an exact
/// unitary) to the components of h after padding with `zeros` zero slots.
inline WeightedMap exact_unitary_mix(const WeightedMap& h, std::size_t zeros, Gen& g) {
  std::vector<WeightedEntry> entries = h.entries();
  for (std::size_t z = 0; z < zeros; ++z) entries.push_back({Rational(1), HoloPoly(h.dim())});
  std::shuffle(entries.begin(), entries.end(), g.engine());
  static const CplxRat phases[] = {CplxRat(1), CplxRat(-1), CplxRat::i(), -CplxRat::i()};
  for (auto& e : entries) e.poly *= phases[g.integer(0, 3)];
  return WeightedMap(h.dim(), std::move(entries));
}

inline HoloPoly var(std::size_t n, std::size_t i) { return HoloPoly::variable(n, i); }

/// (z1^2, z2), the standard non-example.
inline PolyMap square_and_linear() {
  return PolyMap(2, {var(2, 0) * var(2, 0), var(2, 1)});
}

inline WeightedMap weighted(std::size_t n, std::vector<std::pair<Rational, HoloPoly>> parts) {
  std::vector<WeightedEntry> entries;
  for (auto& [w, p] : parts) entries.push_back({w, std::move(p)});
  return WeightedMap(n, std::move(entries));
}

/// (1/2, (1/2)|z1|^2, (1/4)|z2|^2, (1/4)|z1 z2|^2, (1/4)|z2|^4): its top part
/// vanishes on the sphere at z2 = 0.
inline WeightedMap blowup_unknown_map() {
  const HoloPoly z1 = var(2, 0), z2 = var(2, 1);
  return weighted(2, {{Rational(1, 2), HoloPoly::constant(2, CplxRat(1))},
                      {Rational(1, 2), z1},
                      {Rational(1, 4), z2},
                      {Rational(1, 4), z1 * z2},
                      {Rational(1, 4), z2 * z2}});
}

/// Top part has squared norm 1/2 - |z1|^2/4 on the sphere, minimum 1/4.
inline WeightedMap blowup_numeric_map() {
  const HoloPoly z1 = var(2, 0), z2 = var(2, 1);
  return weighted(2, {{Rational(1, 2), HoloPoly::constant(2, CplxRat(1))},
                      {Rational(1, 4), z1},
                      {Rational(1, 4), z1 * z1},
                      {Rational(1, 4), z1 * z2},
                      {Rational(1, 2), z1 * z2},
                      {Rational(1, 2), z2 * z2}});
}

/// 1/4 + (3/4)||z||^2.
inline WeightedMap blowup_top_degree_map() {
  return map_direct_sum(homogeneous_map(2, 0, Rational(1, 4)), homogeneous_map(2, 1, Rational(3, 4)));
}

/// Certified unit-sphere maps covering polynomial, weighted, finite-fold and
/// rational cases.
inline std::vector<std::pair<std::string, RationalMap>> unit_sphere_suite() {
  const HoloPoly z1 = var(2, 0), z2 = var(2, 1);
  std::vector<std::pair<std::string, RationalMap>> out;
  out.emplace_back("identity2", PolyMap::identity(2));
  out.emplace_back("identity3", PolyMap::identity(3));
  out.emplace_back("H2", homogeneous_map(2, 2, Rational(1)));
  out.emplace_back("H3_n3", homogeneous_map(3, 3, Rational(1)));
  out.emplace_back("whitney", PolyMap(2, {z1, z1 * z2, z2 * z2}));
  out.emplace_back("half_plus_identity",
                   map_direct_sum(homogeneous_map(2, 0, Rational(1, 2)), homogeneous_map(2, 1, Rational(1, 2))));
  out.emplace_back("blowup_unknown", blowup_unknown_map());
  out.emplace_back("blowup_numeric", blowup_numeric_map());
  out.emplace_back("blowup_top_degree", blowup_top_degree_map());
  out.emplace_back("poly_1_fold", rescale(poly_k_fold(2, 1, 3, {Rational(1)}).map, Rational(1), Rational(4)));
  out.emplace_back("rational_1_fold",
                   rational_k_fold(2, 1, 2, {Rational(1)}, {CplxRat(Rational(1, 8)), CplxRat(0)}).map);
  out.emplace_back("rational_2_fold",
                   rescale(rational_k_fold(2, 2, 3, {Rational(1), Rational(2)},
                                           {CplxRat(Rational(1, 8)), CplxRat(0)})
                               .map,
                           Rational(1), Rational(2)));
  return out;
}

}  // namespace spheremap::testing

#endif
