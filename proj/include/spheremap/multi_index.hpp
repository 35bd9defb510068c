#ifndef SPHEREMAP_MULTI_INDEX_HPP
#define SPHEREMAP_MULTI_INDEX_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "spheremap/rational.hpp"

namespace spheremap {

/// Exponent vector of a monomial z^alpha in n variables.
///
/// Ordering is graded: lower total degree first, and within a degree the
/// lexicographically larger exponent vector first, so z1^2 < z1 z2 < z2^2.
/// All tables keyed by MultiIndex iterate (and serialize) in this order.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : exps_(n, 0) {}
  explicit MultiIndex(std::vector<int> exps);
  MultiIndex(std::initializer_list<int> exps) : MultiIndex(std::vector<int>(exps)) {}

  static MultiIndex unit(std::size_t n, std::size_t i);

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int degree() const { return degree_; }
  const std::vector<int>& exponents() const { return exps_; }

  /// Adds delta to one exponent; the result must stay nonnegative.
  MultiIndex bumped(std::size_t i, int delta) const;

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.exps_ == b.exps_; }
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// All exponent vectors of total degree d, in MultiIndex order.
std::vector<MultiIndex> monomials_of_degree(std::size_t n, int d);
/// All exponent vectors of total degree <= d, in MultiIndex order.
std::vector<MultiIndex> monomials_up_to_degree(std::size_t n, int d);

/// |alpha|! / (alpha_1! ... alpha_n!)
Integer multinomial(const MultiIndex& alpha);
Integer binomial(unsigned long n, unsigned long k);

}  // namespace spheremap

#endif
