#ifndef SPHEREMAP_ROOTS_HPP
#define SPHEREMAP_ROOTS_HPP

#include <variant>
#include <vector>

#include "spheremap/upoly.hpp"

namespace spheremap {

/// Open interval (lo, hi) with rational endpoints containing exactly one
/// root of the polynomial it was isolated for.
struct RootInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return Rational(hi - lo); }
  Rational midpoint() const { return Rational((lo + hi) / 2); }
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

/// A real root: exact when rational, otherwise an isolating interval.
using RealRoot = std::variant<Rational, RootInterval>;

/// u / gcd(u, u'), made monic.
RatPoly squarefree_part(const RatPoly& u);

/// Sturm chain u, u', -rem(u, u'), ... for a squarefree u.
std::vector<RatPoly> sturm_sequence(const RatPoly& u);

/// Sign variations of the chain evaluated at x (zeros dropped).
int sign_variations(const std::vector<RatPoly>& chain, const Rational& x);

/// Rational in [lo, hi] with the smallest denominator (then numerator).
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

/// All distinct real roots in (0, inf), ascending. Rational roots are
/// returned exactly; irrational ones as disjoint isolating intervals.
/// Throws std::invalid_argument for the zero polynomial.
std::vector<RealRoot> isolate_real_roots(const RatPoly& u);

/// Bisects an isolating interval of u until its width is at most
/// 2^-precision_bits. Returns a degenerate interval if a bisection point
/// hits the root exactly.
RootInterval refine_root(const RatPoly& u, RootInterval iv, unsigned precision_bits);

}  // namespace spheremap

#endif
