#include "spheremap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "spheremap/fold.hpp"
#include "spheremap/sphere_division.hpp"

namespace spheremap {

void SampleConfig::validate() const {
  if (count <= 0) throw std::invalid_argument("sample count must be positive");
  if (!(radius_lo < radius_hi)) throw std::invalid_argument("radius range must satisfy lo < hi");
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
}

DivisibilityCheck check_sphere_map(const RationalMap& f, const Rational& t, const Rational& T) {
  if (sgn(t) <= 0 || sgn(T) <= 0) throw std::invalid_argument("sphere radii must be positive");
  f.require_regular_at_origin();
  const HermPoly G = squared_norm(f.numerator()) - T * squared_norm(f.denominator());
  auto red = reduce_mod_sphere(G, t);
  return {red.remainder.is_zero(), std::move(red.remainder)};
}

void require_unit_sphere_map(const RationalMap& f) {
  if (!check_sphere_map(f, Rational(1), Rational(1)).holds)
    throw PreconditionError("map does not take the unit sphere to the unit sphere");
}

namespace {

using Point = std::vector<std::complex<double>>;

/// Independent stream per sample index, so results do not depend on how
/// samples are scheduled.
std::mt19937_64 sample_stream(std::uint64_t seed, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  return std::mt19937_64(seq);
}

Point random_direction(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Point z(n);
  double norm = 0;
  do {
    norm = 0;
    for (auto& zi : z) {
      zi = {g(rng), g(rng)};
      norm += std::norm(zi);
    }
  } while (norm < 1e-300);
  for (auto& zi : z) zi /= std::sqrt(norm);
  return z;
}

Point sample_shell(std::size_t n, double lo, double hi, std::mt19937_64& rng) {
  Point z = random_direction(n, rng);
  std::uniform_real_distribution<double> radius(lo, hi);
  double r = radius(rng);
  while (r <= lo) r = radius(rng);
  for (auto& zi : z) zi *= r;
  return z;
}

bool near_pole(const RationalMap& f, const Point& z, double tolerance) {
  const auto& q = f.denominator();
  return std::abs(q.eval(std::span<const std::complex<double>>(z))) <=
         tolerance * (1.0 + q.coefficient_magnitude());
}

std::optional<Point> safe_eval(const RationalMap& f, const Point& z, double tolerance) {
  if (near_pole(f, z, tolerance)) return std::nullopt;
  try {
    return eval_float(f, z);
  } catch (const PoleProximity&) {
    return std::nullopt;
  }
}

double norm_of(const Point& w) {
  double s = 0;
  for (const auto& x : w) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace

OutsideReport check_outside(const RationalMap& f, const SampleConfig& cfg) {
  cfg.validate();
  if (cfg.radius_hi <= 1.0) throw std::invalid_argument("outside sampling needs radius_hi > 1");
  require_unit_sphere_map(f);
  OutsideReport rep;
  rep.seed = cfg.seed;
  rep.min_norm = std::numeric_limits<double>::infinity();
  const double lo = std::max(1.0, cfg.radius_lo);
  for (int i = 0; i < cfg.count; ++i) {
    auto rng = sample_stream(cfg.seed, i);
    const Point z = sample_shell(f.dim(), lo, cfg.radius_hi, rng);
    const auto w = safe_eval(f, z, cfg.tolerance);
    if (!w) {
      ++rep.skipped_poles;
      continue;
    }
    ++rep.samples_used;
    const double v = norm_of(*w);
    rep.min_norm = std::min(rep.min_norm, v);
    if (v <= 1.0 + cfg.tolerance) rep.violations.push_back({z, v});
  }
  return rep;
}

ReflectionReport check_reflection(const RationalMap& f, const SampleConfig& cfg) {
  cfg.validate();
  require_unit_sphere_map(f);
  ReflectionReport rep;
  rep.seed = cfg.seed;
  rep.tolerance = cfg.tolerance;
  const double lo = std::max(cfg.radius_lo, 1e-3);
  for (int i = 0; i < cfg.count; ++i) {
    auto rng = sample_stream(cfg.seed, i);
    const Point z = sample_shell(f.dim(), lo, std::max(cfg.radius_hi, lo * 2), rng);
    double nsq = 0;
    for (const auto& x : z) nsq += std::norm(x);
    Point zr = z;
    for (auto& x : zr) x /= nsq;
    const auto a = safe_eval(f, z, cfg.tolerance);
    const auto b = safe_eval(f, zr, cfg.tolerance);
    if (!a || !b) {
      ++rep.skipped_poles;
      continue;
    }
    ++rep.samples_used;
    std::complex<double> dot = 0;
    for (std::size_t j = 0; j < a->size(); ++j) dot += (*a)[j] * std::conj((*b)[j]);
    rep.max_residual = std::max(rep.max_residual, std::abs(dot - 1.0));
  }
  return rep;
}

namespace {

WeightedMap top_degree_part(const WeightedMap& p) {
  const int d = p.degree();
  std::vector<WeightedEntry> entries;
  for (const auto& e : p.entries()) {
    HoloPoly h = e.poly.homogeneous_part(d);
    if (!h.is_zero()) entries.push_back({e.weight, std::move(h)});
  }
  return WeightedMap(p.dim(), std::move(entries));
}

double norm_sq_at(const WeightedMap& p, const Point& z) {
  double s = 0;
  for (const auto& e : p.entries())
    s += to_double(e.weight) * std::norm(e.poly.eval(std::span<const std::complex<double>>(z)));
  return s;
}

/// Seeded sphere grid followed by a shrinking random local search from the
/// best starting points.
double sphere_minimum(const WeightedMap& top) {
  constexpr int kGrid = 4000;
  constexpr int kStarts = 8;
  constexpr int kSteps = 400;
  std::mt19937_64 rng(0xb10e);
  const std::size_t n = top.dim();
  std::vector<std::pair<double, Point>> pts;
  for (int i = 0; i < kGrid; ++i) {
    Point z = random_direction(n, rng);
    pts.emplace_back(norm_sq_at(top, z), std::move(z));
  }
  std::partial_sort(pts.begin(), pts.begin() + kStarts, pts.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
  std::normal_distribution<double> g;
  double best = pts.front().first;
  for (int s = 0; s < kStarts; ++s) {
    auto [v, z] = pts[static_cast<std::size_t>(s)];
    double step = 0.1;
    for (int k = 0; k < kSteps && step > 1e-12; ++k) {
      Point cand = z;
      double norm = 0;
      for (auto& x : cand) {
        x += step * std::complex<double>(g(rng), g(rng));
        norm += std::norm(x);
      }
      for (auto& x : cand) x /= std::sqrt(norm);
      const double cv = norm_sq_at(top, cand);
      if (cv < v) {
        v = cv;
        z = std::move(cand);
      } else {
        step *= 0.9;
      }
    }
    best = std::min(best, v);
  }
  return best;
}

bool is_perfect_square(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return false;
  Integer num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  root = Rational(num, den);
  root.canonicalize();
  return true;
}

/// Exact test that the closed ball B_r(c) meets the open unit ball:
/// ||c|| < 1 + r, decided without square roots.
bool meets_unit_ball(const BallSpec& b) {
  Rational c2 = 0;
  for (const auto& x : b.center) c2 += x.norm_sq();
  const Rational D = c2 - 1 - b.radius_sq;
  return sgn(D) < 0 || D * D < 4 * b.radius_sq;
}

}  // namespace

BlowupCertificate check_norm_blowup(const WeightedMap& p) {
  BlowupCertificate cert;
  const bool origin_fixed = std::all_of(p.entries().begin(), p.entries().end(), [](const auto& e) {
    return e.poly.constant_term().is_zero();
  });
  if (origin_fixed) {
    cert.level = BlowupLevel::ProvedOriginFixed;
    return cert;
  }
  const WeightedMap top = top_degree_part(p);
  const int d = p.degree();
  if (const auto inf = detect_infty_fold(top)) {
    const bool pure = static_cast<int>(inf->C.size()) == d + 1 && sgn(inf->C.back()) > 0 &&
                      std::all_of(inf->C.begin(), inf->C.end() - 1,
                                  [](const Rational& c) { return sgn(c) == 0; });
    if (pure) {
      cert.level = BlowupLevel::ProvedTopDegree;
      return cert;
    }
  }
  const double m = sphere_minimum(top);
  cert.min_value = m;
  cert.level = m < 1e-8 ? BlowupLevel::Unknown : BlowupLevel::NumericEvidence;
  return cert;
}

DivisibilityCheck check_ball_difference(const RationalMap& f, const BallSpec& source,
                                        const BallSpec& target) {
  if (source.center.size() != f.dim()) throw DimensionMismatch("source center has the wrong length");
  if (target.center.size() != f.target_dim())
    throw DimensionMismatch("target center has the wrong length");
  if (sgn(source.radius_sq) <= 0 || sgn(target.radius_sq) <= 0)
    throw std::invalid_argument("ball radii must be positive");
  if (!meets_unit_ball(source)) throw PreconditionError("source ball does not meet the unit ball");
  if (!meets_unit_ball(target)) throw PreconditionError("target ball does not meet the unit ball");
  require_unit_sphere_map(f);

  const HoloPoly q = shift_center(f.denominator(), source.center);
  HermPoly G = Rational(-target.radius_sq) * squared_norm(q);
  const auto& entries = f.numerator().entries();
  for (std::size_t j = 0; j < entries.size(); ++j) {
    const HoloPoly p = shift_center(entries[j].poly, source.center);
    const CplxRat& C = target.center[j];
    if (C.is_zero()) {
      G += entries[j].weight * squared_norm(p);
      continue;
    }
    Rational s;
    if (!is_perfect_square(entries[j].weight, s))
      throw PreconditionError("component " + std::to_string(j) +
                              " has an irrational weight paired with a nonzero target center");
    G += squared_norm(p * CplxRat(s) - q * C);
  }
  auto red = reduce_mod_sphere(G, source.radius_sq);
  return {red.remainder.is_zero(), std::move(red.remainder)};
}

ComplementReport check_complement_proper(const WeightedMap& p, const SampleConfig& cfg) {
  ComplementReport rep;
  rep.outside = check_outside(p, cfg);
  rep.blowup = check_norm_blowup(p);
  if (!rep.outside.passed())
    rep.verdict = ComplementVerdict::Unknown;
  else
    rep.verdict = rep.blowup.proved() ? ComplementVerdict::Proper : ComplementVerdict::ContainmentOnly;
  return rep;
}

const char* to_string(BlowupLevel level) {
  switch (level) {
    case BlowupLevel::ProvedOriginFixed: return "proved_origin_fixed";
    case BlowupLevel::ProvedTopDegree: return "proved_top_degree";
    case BlowupLevel::NumericEvidence: return "numeric_evidence";
    case BlowupLevel::Unknown: return "unknown";
  }
  return "unknown";
}

const char* to_string(ComplementVerdict verdict) {
  switch (verdict) {
    case ComplementVerdict::Proper: return "proper";
    case ComplementVerdict::ContainmentOnly: return "containment_only";
    case ComplementVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace spheremap
