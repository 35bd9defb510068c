#ifndef SPHEREMAP_FACTORY_HPP
#define SPHEREMAP_FACTORY_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "spheremap/errors.hpp"
#include "spheremap/herm_poly.hpp"
#include "spheremap/maps.hpp"

namespace spheremap {

/// H_d scaled so that its squared norm is scale_sq * ||z||^(2d): entries
/// (scale_sq * multinomial(alpha), z^alpha) over |alpha| = d.
WeightedMap homogeneous_map(std::size_t n, int d, const Rational& scale_sq);

/// Certificate that a hermitian table is not positive semidefinite:
/// value = x* C x < 0 where x is indexed by `basis`.
struct NotPSDWitness {
  std::vector<MultiIndex> basis;
  std::vector<CplxRat> vector;
  Rational value;
};

using SosResult = std::variant<WeightedMap, NotPSDWitness>;

/// Exact LDL* of the coefficient matrix of Q over the monomials appearing in
/// its keys, pivoting on the largest remaining diagonal. On success the
/// entries are (d_j, v_j) with sum_j d_j |v_j(z)|^2 = Q exactly.
SosResult sos_decompose(const HermPoly& Q);

/// x* C x for the coefficient matrix C of Q over `basis`.
Rational hermitian_form_value(const HermPoly& Q, const std::vector<MultiIndex>& basis,
                              const std::vector<CplxRat>& x);

/// Positive definiteness of the coefficient matrix over all |alpha| <= k.
bool is_positive_definite(const HermPoly& Q, int k);

class SlackTooLarge : public Error {
 public:
  using Error::Error;
};

class ValidationFailed : public Error {
 public:
  using Error::Error;
};

using CoeffTable = std::map<MultiIndex, Rational>;

struct FactoryTrace {
  HermPoly Qpp;
  HermPoly Qp;
  HermPoly Q;
  HermPoly Q0;
  Rational c;
  CoeffTable c_alpha;
  CoeffTable d_alpha;
  CoeffTable e_alpha;
  CoeffTable f_beta;
  std::vector<CplxRat> a;
  std::string substitution_note;
};

struct PolyFamilyMap {
  WeightedMap map;
  FactoryTrace trace;
};

struct RationalFamilyMap {
  RationalMap map;
  FactoryTrace trace;
};

/// Monomial map of degree m whose fold profile is exactly the k given t
/// values: z^(tensor m-k-1) tensor (sqrt(e_alpha) z^alpha) with
/// Q' = |z1|^2 prod(||z||^2 - t_j) / c + (1 + ||z||^2)^(k+1).
/// Requires n >= 2, k >= 1, m > k and k distinct positive t values.
PolyFamilyMap poly_k_fold(std::size_t n, int k, int m, std::vector<Rational> radii_sq);

/// Rational map (z^(tensor m-k) tensor p0) / (1 + a.z) of degree m with fold
/// profile exactly the given t values, where
/// ||p0||^2 = prod(||z||^2 - t_j) / c + |q|^2 (1 + ||z||^2)^(k-1).
/// Throws SlackTooLarge when a is too large for either exact check.
RationalFamilyMap rational_k_fold(std::size_t n, int k, int m, std::vector<Rational> radii_sq,
                                  const std::vector<CplxRat>& a);

}  // namespace spheremap

#endif
