#include <doctest.h>

#include <cmath>
#include <complex>

#include "spheremap/maps.hpp"
#include "spheremap/rational.hpp"
#include "support.hpp"

using namespace spheremap;
using namespace spheremap::testing;

namespace {

Rational norm_sq(const std::vector<CplxRat>& z) {
  Rational s = 0;
  for (const auto& zi : z) s += zi.norm_sq();
  return s;
}

Rational power(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

bool is_canonical(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num() == q.get_num() && c.get_den() == q.get_den() && sgn(q.get_den()) > 0;
}

/// The weighted H2 map (1: z1^2, 2: z1 z2, 1: z2^2).
WeightedMap weighted_h2() {
  const HoloPoly z1 = var(2, 0), z2 = var(2, 1);
  return weighted(2, {{Rational(1), z1 * z1}, {Rational(2), z1 * z2}, {Rational(1), z2 * z2}});
}

}  // namespace

TEST_SUITE("exactcore") {

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK(format_rational(Rational(-6, 4)) == "-3/2");
  CHECK(format_rational(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("Gaussian rational arithmetic is exact and canonical") {
  Gen g(11);
  for (int trial = 0; trial < 300; ++trial) {
    const CplxRat a = g.cplx(), b = g.cplx(), c = g.cplx();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    const CplxRat p = a * b - c;
    CHECK(is_canonical(p.re()));
    CHECK(is_canonical(p.im()));
    CHECK((a * b).norm_sq() == a.norm_sq() * b.norm_sq());
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
  CHECK_THROWS_AS(CplxRat(1) / CplxRat(0), std::domain_error);
  CHECK(CplxRat::i() * CplxRat::i() == CplxRat(-1));
}

TEST_CASE("multi-index order is graded") {
  const MultiIndex one{0, 0}, z1{1, 0}, z2{0, 1}, z1sq{2, 0}, z1z2{1, 1}, z2sq{0, 2};
  CHECK(one < z1);
  CHECK(z1 < z2);
  CHECK(z2 < z1sq);
  CHECK(z1sq < z1z2);
  CHECK(z1z2 < z2sq);
  CHECK(monomials_of_degree(2, 2) == std::vector<MultiIndex>{z1sq, z1z2, z2sq});
  CHECK(monomials_up_to_degree(3, 2).size() == 10);
  CHECK(multinomial(MultiIndex{2, 1, 1}) == 12);
  CHECK(binomial(6, 2) == 15);
  CHECK_THROWS_AS(MultiIndex({1, -1}), std::invalid_argument);
}

TEST_CASE("tensor product examples") {
  const WeightedMap id = PolyMap::identity(2);
  const WeightedMap zz = map_tensor(id, id);
  REQUIRE(zz.target_dim() == 4);
  CHECK(zz.entries()[1].poly == zz.entries()[2].poly);
  for (const auto& e : zz.entries()) CHECK(e.weight == 1);
  CHECK(squared_norm(zz) == HermPoly::norm_sq_power(2, 2));
  CHECK(tensor_power_of_identity(2, 2) == zz);

  const WeightedMap one = PolyMap(2, {HoloPoly::constant(2, CplxRat(1))});
  CHECK(map_tensor(id, one) == id);
  CHECK(tensor_power_of_identity(3, 0).target_dim() == 1);

  const WeightedMap cubic = map_tensor(weighted_h2(), id);
  CHECK(cubic.degree() == 3);
  CHECK(squared_norm(cubic) == HermPoly::norm_sq_power(2, 3));
}

TEST_CASE("direct sum examples") {
  const WeightedMap id = PolyMap::identity(2);
  const WeightedMap padded = map_direct_sum(id, PolyMap::zero(2, 1));
  REQUIRE(padded.target_dim() == 3);
  CHECK(padded.entries()[2].poly.is_zero());

  const WeightedMap scaled = weighted(2, {{Rational(3), var(2, 0)}, {Rational(3), var(2, 1)}});
  const WeightedMap two = weighted(2, {{Rational(4), HoloPoly::constant(2, CplxRat(1))}});
  const WeightedMap sum = map_direct_sum(scaled, two);
  REQUIRE(sum.target_dim() == 3);
  CHECK(sum.entries()[0].weight == 3);
  CHECK(sum.entries()[1].weight == 3);
  CHECK(sum.entries()[2].weight == 4);
  CHECK(squared_norm(sum) == HermPoly::norm_sq_power(2, 1) * Rational(3) + HermPoly::constant(2, 4));

  const WeightedMap h12 = map_direct_sum(id, weighted_h2());
  CHECK(h12.target_dim() == 5);
  CHECK(squared_norm(h12) == HermPoly::norm_sq_power(2, 1) + HermPoly::norm_sq_power(2, 2));
  CHECK_THROWS_AS(map_direct_sum(id, PolyMap::identity(3)), DimensionMismatch);
}

TEST_CASE("exact squared-norm evaluation") {
  const std::vector<CplxRat> e1{CplxRat(1), CplxRat(0)};
  const std::vector<CplxRat> ones{CplxRat(1), CplxRat(1)};
  CHECK(eval_norm_sq(PolyMap::identity(2), e1) == 1);
  CHECK(eval_norm_sq(weighted_h2(), ones) == 4);
  const WeightedMap root5 = weighted(2, {{Rational(5), HoloPoly::constant(2, CplxRat(1))}});
  Gen g(5);
  for (int i = 0; i < 5; ++i) CHECK(eval_norm_sq(root5, g.point(2)) == 5);
}

TEST_CASE("tensor and direct-sum norms multiply and add") {
  Gen g(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const WeightedMap p = g.weighted_map(n, static_cast<std::size_t>(g.integer(1, 3)), 2);
    const WeightedMap q = g.weighted_map(n, static_cast<std::size_t>(g.integer(1, 3)), 2);
    const auto z = g.point(n);
    CHECK(eval_norm_sq(map_tensor(p, q), z) == eval_norm_sq(p, z) * eval_norm_sq(q, z));
    CHECK(eval_norm_sq(map_direct_sum(p, q), z) == eval_norm_sq(p, z) + eval_norm_sq(q, z));
  }
}

TEST_CASE("tensor powers of the identity have norm a power of ||z||^2") {
  Gen g(19);
  for (std::size_t n = 1; n <= 3; ++n)
    for (int k = 0; k <= 3; ++k) {
      const WeightedMap p = tensor_power_of_identity(n, k);
      CHECK(p.target_dim() == static_cast<std::size_t>(std::pow(n, k)));
      const auto z = g.point(n);
      CHECK(eval_norm_sq(p, z) == power(norm_sq(z), k));
    }
}

TEST_CASE("float evaluation and poles") {
  const auto v = eval_float(PolyMap::identity(2), std::vector<std::complex<double>>{{0.5, 0}, {0, 0}});
  CHECK(v[0] == std::complex<double>(0.5, 0));
  CHECK(v[1] == std::complex<double>(0, 0));

  const HoloPoly q = HoloPoly::constant(2, CplxRat(1)) + var(2, 0) * CplxRat(Rational(1, 8));
  const RationalMap f(PolyMap::identity(2), q);
  const auto w = eval_float(f, std::vector<std::complex<double>>{{0, 8}, {0, 0}});
  const std::complex<double> expected = std::complex<double>(0, 8) / std::complex<double>(1, 1);
  CHECK(std::abs(w[0] - expected) < 1e-14);
  CHECK(std::abs(w[0] - std::complex<double>(4, 4)) < 1e-14);
  CHECK(w[1] == std::complex<double>(0, 0));
  CHECK_THROWS_AS(eval_float(f, std::vector<std::complex<double>>{{-8, 0}, {1, 0}}), PoleProximity);
}

TEST_CASE("weighted components evaluate to sqrt(weight) times the polynomial") {
  const WeightedMap h2 = weighted_h2();
  const std::vector<std::complex<double>> z{{0.3, -0.2}, {0.1, 0.7}};
  const auto v = eval_float(h2, z);
  CHECK(std::abs(v[1] - std::sqrt(2.0) * z[0] * z[1]) < 1e-15);
}

TEST_CASE("rescale examples") {
  const RationalMap id = PolyMap::identity(2);
  CHECK(rescale(id, Rational(1), Rational(1)) == id);
  const RationalMap h2 = weighted_h2();
  const RationalMap unit = rescale(h2, Rational(2), Rational(16));
  CHECK(squared_norm(unit.numerator()) == squared_norm(h2.numerator()));
  const RationalMap lin = rescale(id, Rational(2), Rational(4));
  CHECK(squared_norm(lin.numerator()) == HermPoly::norm_sq_power(2, 1));
  CHECK_THROWS_AS(rescale(id, Rational(0), Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(rescale(id, Rational(1), Rational(-1)), std::invalid_argument);
}

TEST_CASE("rescale round trip") {
  Gen g(23);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const WeightedMap p = g.weighted_map(n, static_cast<std::size_t>(g.integer(1, 3)), 3);
    HoloPoly q = HoloPoly::constant(n, CplxRat(1)) + g.holo(n, 2);
    if (q.is_zero()) continue;
    const RationalMap F(p, q);
    const Rational r = g.positive_rational(), R2 = g.positive_rational();
    const RationalMap back = rescale(rescale(F, r, R2), Rational(1 / r), Rational(1 / R2));
    CHECK(back == F);
  }
}

TEST_CASE("holomorphic shifts") {
  const HoloPoly z1 = var(2, 0);
  const std::vector<CplxRat> zero{CplxRat(0), CplxRat(0)};
  CHECK(shift_center(z1, zero) == z1);
  const std::vector<CplxRat> c{CplxRat(1), CplxRat(0)};
  const HoloPoly expect = z1 * z1 + z1 * CplxRat(2) + HoloPoly::constant(2, CplxRat(1));
  CHECK(shift_center(z1 * z1, c) == expect);
  Gen g(29);
  for (int trial = 0; trial < 50; ++trial) {
    const HoloPoly p = g.holo(2, 4);
    const auto s = g.point(2);
    std::vector<CplxRat> neg;
    for (const auto& x : s) neg.push_back(-x);
    CHECK(shift_center(shift_center(p, s), neg) == p);
    const auto z = g.point(2);
    std::vector<CplxRat> zs{z[0] + s[0], z[1] + s[1]};
    CHECK(shift_center(p, s).eval(z) == p.eval(zs));
  }
}

TEST_CASE("zero map keeps explicit slots") {
  const PolyMap z = PolyMap::zero(3, 4);
  CHECK(z.target_dim() == 4);
  for (const auto& c : z.components()) CHECK(c.is_zero());
  CHECK_THROWS_AS(WeightedMap(2, {{Rational(0), var(2, 0)}}), std::invalid_argument);
  CHECK_THROWS_AS(RationalMap(PolyMap::identity(2), HoloPoly(2)), std::invalid_argument);
}

}  // TEST_SUITE
