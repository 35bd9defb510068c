#include "spheremap/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace spheremap {

namespace {

Integer floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

int sign_at(const RatPoly& u, const Rational& x) { return sgn(u.eval(x)); }

/// Leading coefficient of u after clearing denominators; bounds the
/// denominator of any rational root.
Integer integer_leading_coefficient(const RatPoly& u) {
  Integer l = 1;
  for (const auto& c : u.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Rational lc = u.lead() * l;
  Integer num = lc.get_num();
  return num < 0 ? Integer(-num) : num;
}

Rational cauchy_bound(const RatPoly& u) {
  Rational m = 0;
  for (int i = 0; i < u.degree(); ++i) m = std::max(m, abs(Rational(u.coeff(i) / u.lead())));
  return Rational(m + 1);
}

struct Pending {
  Rational lo;
  Rational hi;
  int count;
};

/// One isolation pass. Returns false (and the root in `exact`) if a
/// bisection point happens to be a root, so the caller can deflate.
bool isolate_pass(const RatPoly& s, std::vector<RealRoot>& out, Rational& exact) {
  const auto chain = sturm_sequence(s);
  const Rational bound = cauchy_bound(s);
  const Integer lead = integer_leading_coefficient(s);
  const Rational target_width(Integer(1), Integer(lead * lead));

  std::vector<Pending> stack{{Rational(0), bound,
                              sign_variations(chain, Rational(0)) - sign_variations(chain, bound)}};
  std::vector<RealRoot> found;
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      // shrink until at most one fraction with denominator <= lead fits
      RootInterval iv{cur.lo, cur.hi};
      const int lo_sign = sign_at(s, iv.lo);
      while (iv.width() >= target_width) {
        Rational mid = iv.midpoint();
        const int m = sign_at(s, mid);
        if (m == 0) {
          exact = mid;
          return false;
        }
        (m == lo_sign ? iv.lo : iv.hi) = mid;
      }
      Rational cand = simplest_rational_between(iv.lo, iv.hi);
      if (sgn(s.eval(cand)) == 0) {
        exact = cand;
        return false;
      }
      found.emplace_back(RootInterval{cur.lo, cur.hi});
      continue;
    }
    Rational mid = (cur.lo + cur.hi) / 2;
    if (sign_at(s, mid) == 0) {
      exact = mid;
      return false;
    }
    const int vm = sign_variations(chain, mid);
    stack.push_back({mid, cur.hi, vm - sign_variations(chain, cur.hi)});
    stack.push_back({cur.lo, mid, sign_variations(chain, cur.lo) - vm});
  }
  out.insert(out.end(), found.begin(), found.end());
  return true;
}

Rational root_key(const RealRoot& r) {
  if (const auto* q = std::get_if<Rational>(&r)) return *q;
  return std::get<RootInterval>(r).lo;
}

}  // namespace

RatPoly squarefree_part(const RatPoly& u) {
  if (u.degree() <= 0) return u.monic();
  const RatPoly g = gcd(u, u.derivative());
  return divmod(u, g).first.monic();
}

std::vector<RatPoly> sturm_sequence(const RatPoly& u) {
  std::vector<RatPoly> chain{u};
  if (u.degree() <= 0) return chain;
  chain.push_back(u.derivative());
  while (true) {
    RatPoly r = -(chain[chain.size() - 2] % chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sgn(p.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_rational_between(hi, lo);
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
  if (sgn(hi) < 0) return Rational(-simplest_rational_between(Rational(-hi), Rational(-lo)));
  const Integer fl = floor_of(lo);
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  const Rational frac_lo = lo - fl;
  const Rational frac_hi = hi - fl;
  const Rational inner = simplest_rational_between(Rational(1 / frac_hi), Rational(1 / frac_lo));
  return Rational(fl + 1 / inner);
}

std::vector<RealRoot> isolate_real_roots(const RatPoly& u) {
  if (u.is_zero()) throw std::invalid_argument("root isolation of the zero polynomial");
  RatPoly s = squarefree_part(u);
  if (s.degree() >= 1 && sgn(s.coeff(0)) == 0) s = divmod(s, RatPoly::x()).first;

  std::vector<RealRoot> roots;
  std::vector<Rational> exact_roots;
  while (s.degree() >= 1) {
    std::vector<RealRoot> pass;
    Rational exact;
    if (isolate_pass(s, pass, exact)) {
      // intervals isolate roots of the deflated polynomial; keep them clear
      // of the rational roots already split off
      for (auto& r : pass) {
        auto& iv = std::get<RootInterval>(r);
        const int lo_sign = sign_at(s, iv.lo);
        auto overlaps = [&] {
          return std::any_of(exact_roots.begin(), exact_roots.end(),
                             [&](const Rational& e) { return iv.lo <= e && e <= iv.hi; });
        };
        while (overlaps()) {
          const Rational mid = iv.midpoint();
          (sign_at(s, mid) == lo_sign ? iv.lo : iv.hi) = mid;
        }
      }
      roots.insert(roots.end(), pass.begin(), pass.end());
      break;
    }
    roots.emplace_back(exact);
    exact_roots.push_back(exact);
    s = divmod(s, RatPoly(std::vector<Rational>{Rational(-exact), Rational(1)})).first;
  }
  std::sort(roots.begin(), roots.end(),
            [](const RealRoot& a, const RealRoot& b) { return root_key(a) < root_key(b); });
  return roots;
}

RootInterval refine_root(const RatPoly& u, RootInterval iv, unsigned precision_bits) {
  const RatPoly s = squarefree_part(u);
  Rational target(Integer(1), Integer(1));
  mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), precision_bits);
  const int lo_sign = sign_at(s, iv.lo);
  if (lo_sign == 0) return {iv.lo, iv.lo};
  if (sign_at(s, iv.hi) == 0) return {iv.hi, iv.hi};
  while (iv.width() > target) {
    Rational mid = iv.midpoint();
    const int m = sign_at(s, mid);
    if (m == 0) return {mid, mid};
    (m == lo_sign ? iv.lo : iv.hi) = mid;
  }
  return iv;
}

}  // namespace spheremap
