#ifndef SPHEREMAP_VERIFY_HPP
#define SPHEREMAP_VERIFY_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "spheremap/errors.hpp"
#include "spheremap/herm_poly.hpp"
#include "spheremap/maps.hpp"

namespace spheremap {

struct SampleConfig {
  int count = 1000;
  std::uint64_t seed = 42;
  double radius_lo = 1.0;
  double radius_hi = 3.0;
  double tolerance = 1e-9;

  /// Throws std::invalid_argument unless count > 0, lo < hi and tolerance > 0.
  void validate() const;
};

struct BallSpec {
  std::vector<CplxRat> center;
  Rational radius_sq;
};

/// A divisibility verdict; the witness is the nonzero remainder when it fails.
struct DivisibilityCheck {
  bool holds = false;
  HermPoly witness;
};

/// ||p||^2 - T |q|^2 divisible by ||z||^2 - t.
DivisibilityCheck check_sphere_map(const RationalMap& f, const Rational& t, const Rational& T);

/// Throws PreconditionError unless f takes the unit sphere to the unit sphere.
void require_unit_sphere_map(const RationalMap& f);

struct SamplePoint {
  std::vector<std::complex<double>> z;
  double value = 0;
};

struct OutsideReport {
  double min_norm = 0;
  int samples_used = 0;
  int skipped_poles = 0;
  std::vector<SamplePoint> violations;
  std::uint64_t seed = 0;

  bool passed() const { return violations.empty(); }
};

/// Samples 1 < ||z|| < radius_hi and flags ||f(z)|| <= 1 + tolerance.
OutsideReport check_outside(const RationalMap& f, const SampleConfig& cfg);

struct ReflectionReport {
  double max_residual = 0;
  double tolerance = 0;
  int samples_used = 0;
  int skipped_poles = 0;
  std::uint64_t seed = 0;

  bool passed() const { return max_residual < tolerance; }
};

/// max |f(z) . conj(f(z / ||z||^2)) - 1| over samples in the radius range.
ReflectionReport check_reflection(const RationalMap& f, const SampleConfig& cfg);

enum class BlowupLevel { ProvedOriginFixed, ProvedTopDegree, NumericEvidence, Unknown };

struct BlowupCertificate {
  BlowupLevel level = BlowupLevel::Unknown;
  /// numeric minimum of ||p_d||^2 on the unit sphere when sampled
  std::optional<double> min_value;

  bool proved() const {
    return level == BlowupLevel::ProvedOriginFixed || level == BlowupLevel::ProvedTopDegree;
  }
};

/// ||p(z)|| -> infinity, proved when p(0) = 0 or when ||p_d||^2 = c ||z||^(2d)
/// exactly; otherwise the minimum of ||p_d||^2 on the unit sphere is
/// estimated and reported (Unknown below 1e-8).
BlowupCertificate check_norm_blowup(const WeightedMap& p);

/// Exact check that f takes the sphere boundary of `source` to that of
/// `target`: ||p - C q||^2 - R^2 |q|^2 is divisible by ||z - c||^2 - r^2.
/// Requires f to be a unit-sphere map and both balls to meet the unit ball.
DivisibilityCheck check_ball_difference(const RationalMap& f, const BallSpec& source,
                                        const BallSpec& target);

enum class ComplementVerdict { Proper, ContainmentOnly, Unknown };

struct ComplementReport {
  ComplementVerdict verdict = ComplementVerdict::Unknown;
  BlowupCertificate blowup;
  OutsideReport outside;
};

ComplementReport check_complement_proper(const WeightedMap& p, const SampleConfig& cfg);

const char* to_string(BlowupLevel level);
const char* to_string(ComplementVerdict verdict);

}  // namespace spheremap

#endif
