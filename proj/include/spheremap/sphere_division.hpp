#ifndef SPHEREMAP_SPHERE_DIVISION_HPP
#define SPHEREMAP_SPHERE_DIVISION_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "spheremap/herm_poly.hpp"

namespace spheremap {

namespace detail {

template <class Coeff>
void accumulate(HermTable<Coeff>& table, const HermKey& key, const Coeff& c) {
  using spheremap::is_zero;
  if (is_zero(c)) return;
  auto [it, inserted] = table.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) table.erase(it);
  }
}

inline int elimination_level(const HermKey& key, std::size_t var) {
  return std::min(key.alpha[var], key.beta[var]);
}

}  // namespace detail

/// Divides a hermitian table by (||z||^2 - t) in the commuting variables
/// {z_i, conj z_i}, rewriting z_v conj(z_v) -> t - sum_{j != v} z_j conj(z_j)
/// until no key has alpha_v > 0 and beta_v > 0.
///
/// Coeff is any ring element supporting +=, unary minus and is_zero();
/// times_t(c) returns c * t. This lets the same routine run with a numeric
/// radius or with t kept as a polynomial indeterminate.
///
/// Returns (quotient, remainder) with input = quotient * (||z||^2 - t) + remainder.
template <class Coeff, class TimesT>
std::pair<HermTable<Coeff>, HermTable<Coeff>> divide_by_sphere(const HermTable<Coeff>& input,
                                                              std::size_t n, std::size_t var,
                                                              TimesT&& times_t) {
  std::vector<HermTable<Coeff>> levels(1);
  for (const auto& [key, c] : input) {
    const auto level = static_cast<std::size_t>(detail::elimination_level(key, var));
    if (levels.size() <= level) levels.resize(level + 1);
    detail::accumulate(levels[level], key, c);
  }
  HermTable<Coeff> quotient;
  // every rewrite of a level-L key produces keys of level exactly L - 1
  for (std::size_t level = levels.size() - 1; level >= 1; --level) {
    for (const auto& [key, c] : levels[level]) {
      const HermKey reduced{key.alpha.bumped(var, -1), key.beta.bumped(var, -1)};
      detail::accumulate(quotient, reduced, c);
      detail::accumulate(levels[level - 1], reduced, times_t(c));
      const Coeff neg = -c;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == var) continue;
        detail::accumulate(levels[level - 1],
                           HermKey{reduced.alpha.bumped(j, 1), reduced.beta.bumped(j, 1)}, neg);
      }
    }
    levels[level].clear();
  }
  return {std::move(quotient), std::move(levels[0])};
}

/// Q = quotient * (||z||^2 - t) + remainder with the remainder free of
/// keys where both alpha_v and beta_v are positive.
struct SphereReduction {
  Rational t;
  HermPoly quotient;
  HermPoly remainder;
};

/// Exact division by (||z||^2 - t), eliminating z_v conj(z_v) (v = 0 by
/// default). Throws std::invalid_argument for t <= 0.
SphereReduction reduce_mod_sphere(const HermPoly& Q, const Rational& t, std::size_t eliminated = 0);

/// The constant c when Q restricted to ||z||^2 = t is constant.
std::optional<Rational> constant_on_sphere(const HermPoly& Q, const Rational& t);

}  // namespace spheremap

#endif
