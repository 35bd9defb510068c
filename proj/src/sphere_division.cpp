#include "spheremap/sphere_division.hpp"

#include <stdexcept>

namespace spheremap {

SphereReduction reduce_mod_sphere(const HermPoly& Q, const Rational& t, std::size_t eliminated) {
  if (sgn(t) <= 0) throw std::invalid_argument("sphere reduction needs t > 0");
  if (Q.dim() == 0) throw std::invalid_argument("sphere reduction needs n >= 1");
  if (eliminated >= Q.dim()) throw std::invalid_argument("eliminated variable out of range");
  auto [quot, rem] = divide_by_sphere(Q.coeffs(), Q.dim(), eliminated,
                                      [&t](const CplxRat& c) { return c * t; });
  return {t, HermPoly::from_trusted(Q.dim(), std::move(quot)),
          HermPoly::from_trusted(Q.dim(), std::move(rem))};
}

std::optional<Rational> constant_on_sphere(const HermPoly& Q, const Rational& t) {
  return reduce_mod_sphere(Q, t).remainder.constant_value();
}

}  // namespace spheremap
