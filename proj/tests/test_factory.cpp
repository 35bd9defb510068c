#include <doctest.h>

#include <cmath>
#include <complex>

#include "spheremap/factory.hpp"
#include "spheremap/fold.hpp"
#include "support.hpp"

using namespace spheremap;
using spheremap::testing::Gen;

namespace {

/// (|z_1|^2 + ... + |z_n|^2)^d by repeated multiplication of diagonal monomials.
HermPoly norm_power_oracle(std::size_t n, int d) {
  HermPoly r(n);
  for (std::size_t i = 0; i < n; ++i) r += HermPoly::diagonal_monomial(MultiIndex::unit(n, i), 1);
  HermPoly acc = HermPoly::constant(n, 1);
  for (int k = 0; k < d; ++k) acc = acc * r;
  return acc;
}

/// Spread of ||f||^2 over seeded float points on the sphere ||z||^2 = t.
double sphere_spread(const RationalMap& f, double t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  double lo = INFINITY, hi = -INFINITY;
  for (int s = 0; s < 200; ++s) {
    std::vector<std::complex<double>> z(f.dim());
    double norm = 0;
    for (auto& zi : z) {
      zi = {g(rng), g(rng)};
      norm += std::norm(zi);
    }
    for (auto& zi : z) zi *= std::sqrt(t / norm);
    double v = 0;
    for (const auto& w : eval_float(f, z)) v += std::norm(w);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

std::vector<Rational> profile_t(const FoldProfile& p) {
  std::vector<Rational> out;
  for (const auto& e : p.entries) out.push_back(std::get<Rational>(e.t));
  return out;
}

std::vector<Rational> profile_T(const FoldProfile& p) {
  std::vector<Rational> out;
  for (const auto& e : p.entries) out.push_back(std::get<Rational>(e.T));
  return out;
}

}  // namespace

TEST_SUITE("factory") {

TEST_CASE("homogeneous maps carry multinomial weights") {
  const auto h2 = homogeneous_map(2, 2, 1);
  REQUIRE(h2.target_dim() == 3);
  CHECK(h2.entries()[0].weight == 1);
  CHECK(h2.entries()[1].weight == 2);
  CHECK(h2.entries()[2].weight == 1);
  CHECK(h2.entries()[0].poly == HoloPoly::monomial(2, {2, 0}));
  CHECK(h2.entries()[1].poly == HoloPoly::monomial(2, {1, 1}));
  CHECK(h2.entries()[2].poly == HoloPoly::monomial(2, {0, 2}));

  const auto h3 = homogeneous_map(2, 3, 1);
  std::vector<Rational> w;
  for (const auto& e : h3.entries()) w.push_back(e.weight);
  CHECK(w == std::vector<Rational>{1, 3, 3, 1});

  CHECK(squared_norm(homogeneous_map(3, 0, 9)) == HermPoly::constant(3, 9));
}

TEST_CASE("homogeneous maps realize the norm powers exactly") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (int d = 0; d <= 6; ++d) {
      const auto h = homogeneous_map(n, d, 1);
      CHECK(squared_norm(h) == norm_power_oracle(n, d));
      CHECK(Integer(static_cast<long>(h.target_dim())) == binomial(n + d - 1, d));
    }
}

TEST_CASE("SOS of the norm squared is the identity") {
  const auto r = sos_decompose(HermPoly::norm_sq_power(2, 1));
  REQUIRE(std::holds_alternative<WeightedMap>(r));
  const auto& w = std::get<WeightedMap>(r);
  REQUIRE(w.target_dim() == 2);
  CHECK(w.entries()[0].weight == 1);
  CHECK(w.entries()[1].weight == 1);
  CHECK(w.entries()[0].poly == HoloPoly::variable(2, 0));
  CHECK(w.entries()[1].poly == HoloPoly::variable(2, 1));
}

TEST_CASE("indefinite diagonal gives a unit witness") {
  const HermPoly Q = HermPoly::diagonal_monomial({1, 0}, 1) - HermPoly::diagonal_monomial({0, 1}, 1);
  const auto r = sos_decompose(Q);
  REQUIRE(std::holds_alternative<NotPSDWitness>(r));
  const auto& w = std::get<NotPSDWitness>(r);
  CHECK(w.value == -1);
  REQUIRE(w.basis.size() == 2);
  CHECK(w.basis[1] == MultiIndex{0, 1});
  CHECK(w.vector[0].is_zero());
  CHECK(w.vector[1] == CplxRat(1));
}

TEST_CASE("zero diagonal with an off-diagonal entry gives a witness") {
  // z1 + conj z1
  HermPoly::Table t;
  t[{MultiIndex{1, 0}, MultiIndex{0, 0}}] = CplxRat(1);
  t[{MultiIndex{0, 0}, MultiIndex{1, 0}}] = CplxRat(1);
  const auto r = sos_decompose(HermPoly(2, t));
  REQUIRE(std::holds_alternative<NotPSDWitness>(r));
  CHECK(std::get<NotPSDWitness>(r).value == -2);
}

TEST_CASE("SOS round trip on random Gram tables") {
  Gen g(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const WeightedMap F = g.weighted_map(n, static_cast<std::size_t>(g.integer(1, 4)), 3);
    const HermPoly Q = squared_norm(F);
    const auto r = sos_decompose(Q);
    REQUIRE(std::holds_alternative<WeightedMap>(r));
    const auto& w = std::get<WeightedMap>(r);
    CHECK(squared_norm(w) == Q);
    for (const auto& e : w.entries()) CHECK(sgn(e.weight) > 0);
  }
}

TEST_CASE("SOS witnesses on random indefinite perturbations") {
  Gen g(32);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const WeightedMap F = g.weighted_map(n, 2, 2);
    // subtract a large multiple of a monomial square
    const MultiIndex alpha = g.index(n, 2);
    const HermPoly Q = squared_norm(F) - HermPoly::diagonal_monomial(alpha, Rational(1000));
    const auto r = sos_decompose(Q);
    REQUIRE(std::holds_alternative<NotPSDWitness>(r));
    const auto& w = std::get<NotPSDWitness>(r);
    CHECK(sgn(w.value) < 0);
    CHECK(hermitian_form_value(Q, w.basis, w.vector) == w.value);
  }
}

TEST_CASE("positive definiteness over the full monomial basis") {
  const HermPoly one = HermPoly::constant(2, 1);
  CHECK(is_positive_definite(one + HermPoly::norm_sq_power(2, 1), 1));
  CHECK_FALSE(is_positive_definite(HermPoly::norm_sq_power(2, 1), 1));  // constant slot is zero
  CHECK_FALSE(is_positive_definite(one, 1));
}

TEST_CASE("worked polynomial example") {
  const auto [p, tr] = poly_k_fold(2, 1, 2, {Rational(1)});
  CHECK(tr.c == 2);
  const CoeffTable expected{{MultiIndex{0, 0}, Rational(1)},    {MultiIndex{1, 0}, Rational(3, 2)},
                            {MultiIndex{0, 1}, Rational(2)},    {MultiIndex{2, 0}, Rational(3, 2)},
                            {MultiIndex{1, 1}, Rational(5, 2)}, {MultiIndex{0, 2}, Rational(1)}};
  CHECK(tr.e_alpha == expected);
  CHECK(p.degree() == 2);
  const auto prof = fold_profile(p);
  CHECK(profile_t(prof) == std::vector<Rational>{1});
  CHECK(profile_T(prof) == std::vector<Rational>{4});
  CHECK(sphere_spread(p, 1.0, 1) < 1e-9);
  CHECK(sphere_spread(p, 0.5, 2) > 1e-3);
  CHECK(sphere_spread(p, 2.0, 3) > 1e-3);
}

TEST_CASE("raising m tensors with z and keeps the fold") {
  const auto inner = poly_k_fold(2, 1, 2, {Rational(1)}).map;
  const auto outer = poly_k_fold(2, 1, 3, {Rational(1)}).map;
  CHECK(outer == map_tensor(PolyMap::identity(2), inner));
  const auto prof = fold_profile(outer);
  CHECK(profile_t(prof) == std::vector<Rational>{1});
  CHECK(profile_T(prof) == std::vector<Rational>{4});
}

TEST_CASE("two-fold monomial map") {
  const auto [p, tr] = poly_k_fold(2, 2, 3, {Rational(1), Rational(4)});
  CHECK(p.degree() == 3);
  for (const auto& e : p.entries()) CHECK(e.poly.terms().size() == 1);
  const auto prof = fold_profile(p);
  CHECK(profile_t(prof) == std::vector<Rational>{1, 4});
  CHECK(profile_T(prof) == std::vector<Rational>{8, 125});
}

TEST_CASE("worked rational example") {
  const std::vector<CplxRat> a{CplxRat(Rational(1, 8)), CplxRat(0)};
  const auto [f, tr] = rational_k_fold(2, 1, 2, {Rational(1)}, a);
  const HoloPoly q = HoloPoly::constant(2, 1) + HoloPoly::variable(2, 0) * CplxRat(Rational(1, 8));
  CHECK(f.denominator() == q);
  CHECK(f.denominator().degree() == 1);
  CHECK(f.numerator().degree() == 2);
  CHECK(tr.Q == Rational(1, 2) * HermPoly::sphere_equation(2, 1) + squared_norm(q));
  const auto prof = fold_profile(f);
  CHECK(profile_t(prof) == std::vector<Rational>{1});
  CHECK(profile_T(prof) == std::vector<Rational>{1});
  CHECK(sphere_spread(f, 1.0, 4) < 1e-9);
  CHECK(sphere_spread(f, 0.5, 5) > 1e-6);
  CHECK(sphere_spread(f, 2.0, 6) > 1e-6);
  const auto e = newton_expand_rational(f, FoldData({{Rational(1), Rational(1)}}));
  CHECK(e.b == std::vector<Rational>{1});
  CHECK(newton_reconstruct(e) == squared_norm(f.numerator()));
  CHECK_THROWS_AS(newton_expand_rational(f, FoldData({{Rational(1), Rational(1)}, {Rational(2), Rational(3)}})),
                  NotAFold);
}

TEST_CASE("rational family preconditions") {
  const std::vector<CplxRat> zero{CplxRat(0), CplxRat(0)};
  CHECK_THROWS_AS(rational_k_fold(2, 1, 2, {Rational(1)}, zero), std::invalid_argument);
  const std::vector<CplxRat> big{CplxRat(10), CplxRat(0)};
  CHECK_THROWS_AS(rational_k_fold(2, 1, 2, {Rational(1)}, big), SlackTooLarge);
  CHECK_THROWS_AS(poly_k_fold(2, 2, 2, {Rational(1), Rational(2)}), std::invalid_argument);
  CHECK_THROWS_AS(poly_k_fold(2, 2, 3, {Rational(1), Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(poly_k_fold(1, 1, 2, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("rational family with complex a and several folds") {
  const std::vector<CplxRat> a{CplxRat(Rational(1, 64), Rational(1, 64)), CplxRat(Rational(-1, 64))};
  const auto [f, tr] = rational_k_fold(2, 3, 3, {Rational(1), Rational(2), Rational(3)}, a);
  CHECK(f.numerator().degree() == 3);
  const auto prof = fold_profile(f);
  CHECK(profile_t(prof) == std::vector<Rational>{1, 2, 3});
  // T = t^(m-k) (1+t)^(k-1)
  CHECK(profile_T(prof) == std::vector<Rational>{4, 9, 16});
  CHECK(f.denominator().degree() < f.numerator().degree());
}

TEST_CASE("unreduced radii are accepted") {
  const auto [p, tr] = poly_k_fold(2, 2, 3, {Rational(2, 4), Rational(4, 2)});
  CHECK(profile_t(fold_profile(p)) == std::vector<Rational>{Rational(1, 2), Rational(2)});
  const FoldData d({{Rational(6, 3), Rational(8, 2)}});
  CHECK(format_rational(d.pairs()[0].t) == "2");
}

TEST_CASE("factory grid respects the degree bounds") {
  Gen g(33);
  for (std::size_t n : {2u, 3u})
    for (int k = 1; k <= 3; ++k)
      for (int m = k; m <= 5; ++m) {
        INFO("n=" << n << " k=" << k << " m=" << m);
        std::vector<Rational> t;
        for (int j = 1; j <= k; ++j) t.emplace_back(2 * j - 1, 2);
        if (m > k) {
          const auto [p, tr] = poly_k_fold(n, k, m, t);
          CHECK(p.degree() == m);
          for (const auto& e : p.entries()) CHECK(e.poly.terms().size() == 1);
          const auto prof = fold_profile(p);
          CHECK(profile_t(prof) == t);
          CHECK(static_cast<int>(prof.entries.size()) < m);
        }
        std::vector<CplxRat> a(n, CplxRat(0));
        a[n - 1] = CplxRat(Rational(1, 64), Rational(-1, 64));
        const auto [f, tr] = rational_k_fold(n, k, m, t, a);
        CHECK(f.numerator().degree() == m);
        CHECK(f.denominator().degree() == 1);
        const auto prof = fold_profile(f);
        CHECK(profile_t(prof) == t);
        CHECK(static_cast<int>(prof.entries.size()) < m + 1);
        // q does not divide p: on random lines, p is not identically zero at the root of q
        for (int line = 0; line < 3; ++line) {
          const auto base = g.point(n), dir = g.point(n);
          const CplxRat slope = f.denominator().eval(dir) - f.denominator().eval(std::vector<CplxRat>(n, CplxRat(0)));
          if (slope.is_zero()) continue;
          const CplxRat w = -f.denominator().eval(base) / slope;
          std::vector<CplxRat> z(n);
          for (std::size_t i = 0; i < n; ++i) z[i] = base[i] + w * dir[i];
          CHECK(f.denominator().eval(z).is_zero());
          CHECK(sgn(eval_norm_sq(f.numerator(), z)) > 0);
        }
      }
}

}  // TEST_SUITE
