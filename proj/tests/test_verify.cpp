#include <doctest.h>

#include <cmath>

#include "spheremap/fold.hpp"
#include "spheremap/sphere_division.hpp"
#include "spheremap/verify.hpp"
#include "support.hpp"

using namespace spheremap;
using namespace spheremap::testing;

namespace {

BallSpec ball(std::vector<CplxRat> c, const Rational& r2) { return {std::move(c), r2}; }

BallSpec origin_ball(std::size_t n, const Rational& r2) {
  return ball(std::vector<CplxRat>(n, CplxRat(0)), r2);
}

SampleConfig samples(int count, std::uint64_t seed = 42) {
  SampleConfig cfg;
  cfg.count = count;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("sample configuration is validated") {
  SampleConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.count = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = SampleConfig{};
  cfg.radius_lo = 3;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = SampleConfig{};
  cfg.tolerance = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("sphere map checks") {
  for (int t : {1, 2, 5}) CHECK(check_sphere_map(PolyMap::identity(2), Rational(t), Rational(t)).holds);
  CHECK(check_sphere_map(homogeneous_map(2, 2, Rational(1)), Rational(2), Rational(4)).holds);

  const auto bad = check_sphere_map(square_and_linear(), Rational(1), Rational(1));
  CHECK_FALSE(bad.holds);
  CHECK_FALSE(bad.witness.is_zero());
  // |z1|^4 + |z2|^2 - 1 reduces to |z1|^4 - |z1|^2 modulo the sphere
  CHECK(bad.witness == reduce_mod_sphere(squared_norm(WeightedMap(square_and_linear())) -
                                             HermPoly::constant(2, 1),
                                         Rational(1))
                           .remainder);

  CHECK_THROWS_AS(check_sphere_map(PolyMap::identity(2), Rational(0), Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(check_sphere_map(PolyMap::identity(2), Rational(1), Rational(-1)), std::invalid_argument);
  const RationalMap pole(PolyMap::identity(2), var(2, 0));
  CHECK_THROWS_AS(check_sphere_map(pole, Rational(1), Rational(1)), PreconditionError);
}

TEST_CASE("every suite map is a certified unit-sphere map") {
  const auto suite = unit_sphere_suite();
  CHECK(suite.size() >= 10);
  for (const auto& [name, f] : suite) {
    INFO(name);
    CHECK(check_sphere_map(f, Rational(1), Rational(1)).holds);
  }
}

TEST_CASE("sphere check agrees with fold profile membership") {
  Gen g(77);
  int agreements = 0;
  const Rational probes[] = {Rational(1, 2), Rational(1), Rational(2), Rational(3)};
  auto compare = [&](const RationalMap& f) {
    const auto prof = fold_profile(f);
    for (const auto& t : probes) {
      bool listed = prof.is_infinite();
      Rational T;
      for (const auto& e : prof.entries)
        if (const auto* tr = std::get_if<Rational>(&e.t); tr && *tr == t) {
          listed = true;
          T = std::get<Rational>(e.T);
        }
      if (prof.is_infinite()) {
        const auto& C = prof.C;
        T = 0;
        Rational pw = 1;
        for (const auto& c : C) {
          T += c * pw;
          pw *= t;
        }
      }
      if (listed) {
        CHECK(check_sphere_map(f, t, T).holds);
        ++agreements;
      } else {
        for (const Rational& guess : {Rational(1), t, Rational(t * t), Rational(t * t * t)}) {
          if (sgn(guess) <= 0) continue;
          CHECK_FALSE(check_sphere_map(f, t, guess).holds);
        }
      }
    }
  };
  for (int trial = 0; trial < 50; ++trial) {
    const WeightedMap p = g.weighted_map(2, static_cast<std::size_t>(g.integer(1, 3)), 2);
    try {
      compare(p);
    } catch (const PreconditionError&) {
      // the cross determinants vanish identically; nothing to compare
    }
  }
  for (const auto& [name, f] : unit_sphere_suite()) {
    INFO(name);
    compare(f);
  }
  CHECK(agreements > 12);
}

TEST_CASE("outside containment on the identity") {
  const auto rep = check_outside(PolyMap::identity(2), samples(500));
  CHECK(rep.passed());
  CHECK(rep.samples_used == 500);
  CHECK(rep.min_norm > 1.0);
  CHECK(rep.min_norm < 1.1);
  CHECK(rep.seed == 42);
}

TEST_CASE("outside containment on the rational one-fold map") {
  const auto f = rational_k_fold(2, 1, 2, {Rational(1)}, {CplxRat(Rational(1, 8)), CplxRat(0)}).map;
  const auto unit = rescale(f, Rational(1), Rational(1));
  const auto rep = check_outside(unit, samples(1000));
  CHECK(rep.passed());
  CHECK(rep.samples_used + rep.skipped_poles == 1000);
  CHECK(rep.min_norm > 1.0);
}

TEST_CASE("outside and reflection laws over the certified suite") {
  for (const auto& [name, f] : unit_sphere_suite()) {
    INFO(name);
    const auto out = check_outside(f, samples(300, 7));
    CHECK(out.passed());
    SampleConfig cfg = samples(300, 9);
    cfg.tolerance = 1e-10;
    const auto refl = check_reflection(f, cfg);
    CHECK(refl.passed());
    CHECK(refl.samples_used > 0);
  }
}

TEST_CASE("sampling is reproducible from the seed") {
  const auto f = homogeneous_map(2, 2, Rational(1));
  const auto a = check_outside(f, samples(200, 5));
  const auto b = check_outside(f, samples(200, 5));
  const auto c = check_outside(f, samples(200, 6));
  CHECK(a.min_norm == b.min_norm);
  CHECK(a.min_norm != c.min_norm);
}

TEST_CASE("non-sphere maps are rejected by the sampling checks") {
  CHECK_THROWS_AS(check_outside(square_and_linear(), samples(10)), PreconditionError);
  CHECK_THROWS_AS(check_reflection(square_and_linear(), samples(10)), PreconditionError);
  Gen g(3);
  CHECK_THROWS_AS(check_reflection(g.weighted_map(2, 3, 2), samples(10)), PreconditionError);
}

TEST_CASE("reflection residual on identity and H2") {
  SampleConfig cfg = samples(1000);
  cfg.tolerance = 1e-10;
  const auto id = check_reflection(PolyMap::identity(2), cfg);
  CHECK(id.passed());
  CHECK(id.max_residual < 1e-14);
  const auto h2 = check_reflection(homogeneous_map(2, 2, Rational(1)), cfg);
  CHECK(h2.passed());
  CHECK(h2.samples_used == 1000);
}

TEST_CASE("norm blow-up certificate levels") {
  CHECK(check_norm_blowup(homogeneous_map(2, 2, Rational(1))).level == BlowupLevel::ProvedOriginFixed);
  CHECK(check_norm_blowup(blowup_top_degree_map()).level == BlowupLevel::ProvedTopDegree);

  const auto numeric = check_norm_blowup(blowup_numeric_map());
  CHECK(numeric.level == BlowupLevel::NumericEvidence);
  REQUIRE(numeric.min_value.has_value());
  CHECK(*numeric.min_value == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(*numeric.min_value >= 0.25 - 1e-12);

  const auto unknown = check_norm_blowup(blowup_unknown_map());
  CHECK(unknown.level == BlowupLevel::Unknown);
  REQUIRE(unknown.min_value.has_value());
  CHECK(*unknown.min_value < 1e-8);
}

TEST_CASE("ball-difference examples") {
  const RationalMap id = PolyMap::identity(2);
  CHECK(check_ball_difference(id, origin_ball(2, Rational(1, 4)), origin_ball(2, Rational(1, 4))).holds);

  const auto mismatch =
      check_ball_difference(id, origin_ball(2, Rational(1, 4)), origin_ball(2, Rational(1, 2)));
  CHECK_FALSE(mismatch.holds);
  CHECK(mismatch.witness.constant_value() == Rational(-1, 4));

  const std::vector<CplxRat> c{CplxRat(Rational(1, 4)), CplxRat(0)};
  CHECK(check_ball_difference(id, ball(c, Rational(1, 4)), ball(c, Rational(1, 4))).holds);
  CHECK_FALSE(check_ball_difference(id, ball(c, Rational(1, 4)), origin_ball(2, Rational(1, 4))).holds);
}

TEST_CASE("ball-difference preconditions") {
  const RationalMap id = PolyMap::identity(2);
  const std::vector<CplxRat> far{CplxRat(3), CplxRat(0)};
  CHECK_THROWS_AS(check_ball_difference(id, ball(far, Rational(1)), origin_ball(2, Rational(1))),
                  PreconditionError);
  // ||c|| = 2, r = 1: tangent from outside, closed ball misses the open unit ball
  const std::vector<CplxRat> tangent{CplxRat(2), CplxRat(0)};
  CHECK_THROWS_AS(check_ball_difference(id, ball(tangent, Rational(1)), origin_ball(2, Rational(1))),
                  PreconditionError);
  const std::vector<CplxRat> near{CplxRat(2), CplxRat(0)};
  CHECK_NOTHROW(check_ball_difference(id, ball(near, Rational(5, 4)), origin_ball(2, Rational(1))));
  CHECK_THROWS_AS(check_ball_difference(square_and_linear(), origin_ball(2, Rational(1)),
                                        origin_ball(2, Rational(1))),
                  PreconditionError);
  CHECK_THROWS_AS(check_ball_difference(id, origin_ball(3, Rational(1)), origin_ball(2, Rational(1))),
                  DimensionMismatch);
  CHECK_THROWS_AS(check_ball_difference(id, origin_ball(2, Rational(0)), origin_ball(2, Rational(1))),
                  std::invalid_argument);
  // irrational component weight paired with a nonzero target center
  const auto h2 = homogeneous_map(2, 2, Rational(1));
  const std::vector<CplxRat> C{CplxRat(0), CplxRat(Rational(1, 4)), CplxRat(0)};
  CHECK_THROWS_AS(check_ball_difference(h2, origin_ball(2, Rational(1)), ball(C, Rational(1))),
                  PreconditionError);
}

TEST_CASE("zero-centred ball differences reduce to sphere checks") {
  const Rational radii[] = {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2), Rational(9, 4)};
  for (const auto& [name, f] : unit_sphere_suite()) {
    INFO(name);
    const std::size_t n = f.dim(), N = f.target_dim();
    for (const auto& r2 : radii)
      for (const auto& R2 : radii) {
        const auto ball_check = check_ball_difference(f, origin_ball(n, r2), origin_ball(N, R2));
        const auto sphere_check = check_sphere_map(f, r2, R2);
        CHECK(ball_check.holds == sphere_check.holds);
        CHECK(ball_check.witness == sphere_check.witness);
      }
  }
}

TEST_CASE("complement verdicts") {
  const auto cfg = samples(300);
  CHECK(check_complement_proper(homogeneous_map(2, 2, Rational(1)), cfg).verdict == ComplementVerdict::Proper);
  CHECK(check_complement_proper(PolyMap::identity(2), cfg).verdict == ComplementVerdict::Proper);
  CHECK(check_complement_proper(blowup_top_degree_map(), cfg).verdict == ComplementVerdict::Proper);
  const auto unknown = check_complement_proper(blowup_unknown_map(), cfg);
  CHECK(unknown.verdict == ComplementVerdict::ContainmentOnly);
  CHECK(unknown.outside.passed());
  CHECK(check_complement_proper(blowup_numeric_map(), cfg).verdict == ComplementVerdict::ContainmentOnly);
  CHECK_THROWS_AS(check_complement_proper(square_and_linear(), cfg), PreconditionError);
  CHECK(std::string(to_string(ComplementVerdict::ContainmentOnly)) == "containment_only");
  CHECK(std::string(to_string(BlowupLevel::ProvedTopDegree)) == "proved_top_degree");
}

}  // TEST_SUITE
