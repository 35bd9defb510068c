#ifndef SPHEREMAP_FOLD_HPP
#define SPHEREMAP_FOLD_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "spheremap/errors.hpp"
#include "spheremap/herm_poly.hpp"
#include "spheremap/maps.hpp"
#include "spheremap/roots.hpp"

namespace spheremap {

/// The map takes the sphere ||z||^2 = t to the sphere ||w||^2 = T.
struct FoldPair {
  Rational t;
  Rational T;
  friend bool operator==(const FoldPair&, const FoldPair&) = default;
};

/// Sphere pairs sorted by strictly increasing t; all t and T positive.
class FoldData {
 public:
  FoldData() = default;
  /// Sorts by t. Throws std::invalid_argument on a repeated t or a
  /// nonpositive entry.
  explicit FoldData(std::vector<FoldPair> pairs);

  const std::vector<FoldPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  friend bool operator==(const FoldData&, const FoldData&) = default;

 private:
  std::vector<FoldPair> pairs_;
};

/// Newton divided differences b_j = [T_1, ..., T_{j+1}] of the T values over
/// the nodes t, for j = 0 .. k-1.
std::vector<Rational> divided_differences(const FoldData& folds);

/// A claimed fold failed at step `step` (1-based): Q_{step-1} - b_{step-1}|q|^2
/// is not divisible by ||z||^2 - t_step. The witness is the division remainder.
class NotAFold : public Error {
 public:
  NotAFold(int step, HermPoly witness);
  int step() const { return step_; }
  const HermPoly& witness() const { return witness_; }

 private:
  int step_;
  HermPoly witness_;
};

/// The denominator degree exceeds a bound certified by the expansion.
class DegreeViolation : public Error {
 public:
  using Error::Error;
};

/// The probabilistic check found a common factor of numerator and denominator.
class NotReduced : public Error {
 public:
  using Error::Error;
};

/// deg q <= bound, certified because b_j != 0.
struct DegreeCertificate {
  int j;
  int bound;
  friend bool operator==(const DegreeCertificate&, const DegreeCertificate&) = default;
};

struct NewtonExpansion {
  FoldData folds;
  std::vector<Rational> b;
  /// Q_1 .. Q_k
  std::vector<HermPoly> intermediates;
  /// Q_k (zero-fold expansions keep Q_0 here)
  HermPoly remainder;
  /// |q|^2 for rational input
  std::optional<HermPoly> denom_norm_sq;
  std::vector<DegreeCertificate> degree_certificates;
};

/// Repeated sphere division of ||p||^2 along the claimed folds.
/// Throws NotAFold when a claimed fold is not genuine.
NewtonExpansion newton_expand_poly(const WeightedMap& p, const FoldData& folds);

/// Same scheme for f = p/q, subtracting b_{j-1}|q|^2 at each step. Emits a
/// degree certificate (j, m - j) for each nonzero b_j and throws
/// DegreeViolation if deg q exceeds one. With check_reduced the input is
/// first screened by probably_reduced() (throws NotReduced).
NewtonExpansion newton_expand_rational(const RationalMap& f, const FoldData& folds,
                                       bool check_reduced = true);

/// (sum_j b_j prod_{i<j}(||z||^2 - t_i)) |q|^2 + Q_k prod_{i<=k}(||z||^2 - t_i)
HermPoly newton_reconstruct(const NewtonExpansion& e);

struct InfinityFold {
  /// ||f||^2 = sum_j C_j ||z||^(2j)
  std::vector<Rational> C;
  /// The identity holds with a nonconstant denominator, so the input was not
  /// in reduced terms.
  bool reducible_witness = false;
};

/// Solves ||p||^2 = (sum_j C_j ||z||^(2j)) |q|^2 for C by exact elimination.
/// Requires q(0) != 0.
std::optional<InfinityFold> detect_infty_fold(const RationalMap& f);

using RealValue = std::variant<Rational, RootInterval>;

struct ProfileEntry {
  RealValue t;
  RealValue T;
};

struct FoldProfile {
  enum class Kind { Finite, Infinite };
  Kind kind = Kind::Finite;
  std::vector<ProfileEntry> entries;
  std::vector<Rational> C;
  bool reducible_witness = false;

  bool is_infinite() const { return kind == Kind::Infinite; }
};

/// Every zero-centric sphere pair of f, or the infinite-fold coefficients.
///
/// The remainders of ||p||^2 and |q|^2 modulo ||z||^2 - t are computed with
/// t symbolic; folds are the positive roots of the gcd of all 2x2 cross
/// determinants of the two remainder vectors. Rational roots are validated
/// exactly, irrational ones by sphere sampling at tolerance 1e-9.
FoldProfile fold_profile(const RationalMap& f);

/// One-sided reducedness screen: restricts numerator and denominator to
/// three seeded random lines and returns false if they share a nontrivial
/// univariate gcd on all of them.
bool probably_reduced(const RationalMap& f, std::uint64_t seed = 0x5eed);

}  // namespace spheremap

#endif
