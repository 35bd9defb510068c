#include "spheremap/multi_index.hpp"

#include <numeric>
#include <stdexcept>

namespace spheremap {

MultiIndex::MultiIndex(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_)
    if (e < 0) throw std::invalid_argument("negative exponent in multi-index");
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i) {
  MultiIndex m(n);
  m.exps_.at(i) = 1;
  m.degree_ = 1;
  return m;
}

MultiIndex MultiIndex::bumped(std::size_t i, int delta) const {
  MultiIndex m = *this;
  m.exps_.at(i) += delta;
  if (m.exps_[i] < 0) throw std::invalid_argument("negative exponent in multi-index");
  m.degree_ += delta;
  return m;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multi-index length mismatch");
  MultiIndex m = a;
  for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] += b.exps_[i];
  m.degree_ += b.degree_;
  return m;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  if (auto c = a.exps_.size() <=> b.exps_.size(); c != 0) return c;
  // larger exponent in an earlier variable sorts first
  for (std::size_t i = 0; i < a.exps_.size(); ++i)
    if (a.exps_[i] != b.exps_[i]) return b.exps_[i] <=> a.exps_[i];
  return std::strong_ordering::equal;
}

namespace {

void enumerate(std::size_t n, std::size_t pos, int remaining, std::vector<int>& cur,
               std::vector<MultiIndex>& out) {
  if (pos + 1 == n) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[pos] = e;
    enumerate(n, pos + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(std::size_t n, int d) {
  std::vector<MultiIndex> out;
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  std::vector<int> cur(n, 0);
  enumerate(n, 0, d, cur, out);
  return out;
}

std::vector<MultiIndex> monomials_up_to_degree(std::size_t n, int d) {
  std::vector<MultiIndex> out;
  for (int k = 0; k <= d; ++k) {
    auto layer = monomials_of_degree(n, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer multinomial(const MultiIndex& alpha) {
  Integer r = 1;
  unsigned long acc = 0;
  for (int e : alpha.exponents()) {
    acc += static_cast<unsigned long>(e);
    r *= binomial(acc, static_cast<unsigned long>(e));
  }
  return r;
}

}  // namespace spheremap
