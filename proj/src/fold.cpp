#include "spheremap/fold.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "spheremap/sphere_division.hpp"

namespace spheremap {

FoldData::FoldData(std::vector<FoldPair> pairs) : pairs_(std::move(pairs)) {
  for (auto& p : pairs_) {
    p.t.canonicalize();
    p.T.canonicalize();
  }
  std::sort(pairs_.begin(), pairs_.end(),
            [](const FoldPair& a, const FoldPair& b) { return a.t < b.t; });
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (sgn(pairs_[i].t) <= 0 || sgn(pairs_[i].T) <= 0)
      throw std::invalid_argument("fold radii must be positive");
    if (i > 0 && pairs_[i].t == pairs_[i - 1].t)
      throw std::invalid_argument("duplicate fold radius t = " + format_rational(pairs_[i].t));
  }
}

std::vector<Rational> divided_differences(const FoldData& folds) {
  const auto& p = folds.pairs();
  std::vector<Rational> table;
  table.reserve(p.size());
  for (const auto& f : p) table.push_back(f.T);
  std::vector<Rational> b;
  b.reserve(p.size());
  // table[l] holds [T_1, ..., T_j, T_l] after round j
  for (std::size_t j = 0; j < p.size(); ++j) {
    b.push_back(table[j]);
    for (std::size_t l = j + 1; l < p.size(); ++l)
      table[l] = (table[l] - table[j]) / (p[l].t - p[j].t);
  }
  return b;
}

NotAFold::NotAFold(int step, HermPoly witness)
    : Error("claimed fold " + std::to_string(step) + " is not a sphere-to-sphere fold"),
      step_(step),
      witness_(std::move(witness)) {}

namespace {

NewtonExpansion expand(const HermPoly& norm_sq, const HermPoly& weight, const FoldData& folds) {
  NewtonExpansion e;
  e.folds = folds;
  e.b = divided_differences(folds);
  HermPoly Q = norm_sq;
  for (std::size_t j = 0; j < folds.size(); ++j) {
    auto red = reduce_mod_sphere(Q - e.b[j] * weight, folds.pairs()[j].t);
    if (!red.remainder.is_zero()) throw NotAFold(static_cast<int>(j + 1), std::move(red.remainder));
    Q = std::move(red.quotient);
    e.intermediates.push_back(Q);
  }
  e.remainder = std::move(Q);
  return e;
}

}  // namespace

NewtonExpansion newton_expand_poly(const WeightedMap& p, const FoldData& folds) {
  return expand(squared_norm(p), HermPoly::constant(p.dim(), Rational(1)), folds);
}

NewtonExpansion newton_expand_rational(const RationalMap& f, const FoldData& folds,
                                       bool check_reduced) {
  f.require_regular_at_origin();
  if (check_reduced && !probably_reduced(f))
    throw NotReduced("numerator and denominator share a common factor");
  HermPoly qq = squared_norm(f.denominator());
  NewtonExpansion e = expand(squared_norm(f.numerator()), qq, folds);
  e.denom_norm_sq = std::move(qq);

  const int m = f.numerator().degree();
  const int dq = f.denominator().degree();
  for (std::size_t j = 0; j < e.b.size(); ++j) {
    if (sgn(e.b[j]) == 0) continue;
    const int bound = m - static_cast<int>(j);
    e.degree_certificates.push_back({static_cast<int>(j), bound});
    if (dq > bound)
      throw DegreeViolation("denominator degree " + std::to_string(dq) + " exceeds certified bound " +
                            std::to_string(bound) + " from b_" + std::to_string(j));
  }
  if (folds.size() >= 2 && f.dim() >= 2 && dq >= m)
    throw DegreeViolation("two certified folds require deg q < deg p");
  return e;
}

HermPoly newton_reconstruct(const NewtonExpansion& e) {
  const std::size_t n = e.remainder.dim();
  const HermPoly weight = e.denom_norm_sq ? *e.denom_norm_sq : HermPoly::constant(n, Rational(1));
  HermPoly sum(n);
  HermPoly basis = HermPoly::constant(n, Rational(1));
  for (std::size_t j = 0; j < e.b.size(); ++j) {
    sum += e.b[j] * basis;
    basis = basis * HermPoly::sphere_equation(n, e.folds.pairs()[j].t);
  }
  return sum * weight + e.remainder * basis;
}

// ---------------------------------------------------------------------------
// infinity-fold detection

namespace {

/// Streaming row echelon form for an overdetermined system over Q with
/// `unknowns` columns plus a right-hand side.
class EchelonSolver {
 public:
  explicit EchelonSolver(std::size_t unknowns) : unknowns_(unknowns) {}

  /// Returns false if the row makes the system inconsistent.
  bool add(std::vector<Rational> row) {
    for (const auto& [col, r] : rows_) {
      if (sgn(row[col]) == 0) continue;
      const Rational f = row[col];
      for (std::size_t c = col; c <= unknowns_; ++c) row[c] -= f * r[c];
    }
    std::size_t pivot = 0;
    while (pivot < unknowns_ && sgn(row[pivot]) == 0) ++pivot;
    if (pivot == unknowns_) return sgn(row[unknowns_]) == 0;
    const Rational inv = 1 / row[pivot];
    for (std::size_t c = pivot; c <= unknowns_; ++c) row[c] *= inv;
    rows_.emplace_back(pivot, std::move(row));
    std::sort(rows_.begin(), rows_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return true;
  }

  /// Back substitution; free unknowns are set to zero.
  std::vector<Rational> solve() const {
    std::vector<Rational> x(unknowns_);
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      const auto& [col, r] = *it;
      Rational v = r[unknowns_];
      for (std::size_t c = col + 1; c < unknowns_; ++c) v -= r[c] * x[c];
      x[col] = v;
    }
    return x;
  }

 private:
  std::size_t unknowns_;
  std::vector<std::pair<std::size_t, std::vector<Rational>>> rows_;
};

}  // namespace

std::optional<InfinityFold> detect_infty_fold(const RationalMap& f) {
  f.require_regular_at_origin();
  const std::size_t n = f.dim();
  const HermPoly A = squared_norm(f.numerator());
  const HermPoly B = squared_norm(f.denominator());
  const int m = std::max(f.numerator().degree(), 0);

  std::vector<HermPoly> basis;
  basis.reserve(static_cast<std::size_t>(m) + 1);
  HermPoly power = B;
  const HermPoly norm = HermPoly::norm_sq_power(n, 1);
  for (int j = 0; j <= m; ++j) {
    basis.push_back(power);
    power = power * norm;
  }

  std::set<HermKey> keys;
  for (const auto& [k, c] : A.coeffs()) keys.insert(k);
  for (const auto& Bj : basis)
    for (const auto& [k, c] : Bj.coeffs()) keys.insert(k);

  const std::size_t unknowns = basis.size();
  EchelonSolver solver(unknowns);
  for (const auto& key : keys) {
    if (key.mirrored() < key) continue;  // the mirror equation is the conjugate
    std::vector<Rational> re(unknowns + 1), im(unknowns + 1);
    for (std::size_t j = 0; j < unknowns; ++j) {
      const CplxRat c = basis[j].coeff(key.alpha, key.beta);
      re[j] = c.re();
      im[j] = c.im();
    }
    const CplxRat a = A.coeff(key.alpha, key.beta);
    re[unknowns] = a.re();
    im[unknowns] = a.im();
    if (!solver.add(std::move(re)) || !solver.add(std::move(im))) return std::nullopt;
  }

  InfinityFold out;
  out.C = solver.solve();
  while (out.C.size() > 1 && sgn(out.C.back()) == 0) out.C.pop_back();
  out.reducible_witness = !f.is_polynomial();
  return out;
}

// ---------------------------------------------------------------------------
// fold profile

namespace {

/// Complex number whose parts are polynomials in the indeterminate t.
struct TCplx {
  RatPoly re;
  RatPoly im;

  TCplx& operator+=(const TCplx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend TCplx operator-(const TCplx& a) { return {-a.re, -a.im}; }
  friend TCplx operator*(const TCplx& a, const TCplx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend TCplx operator-(const TCplx& a, const TCplx& b) { return {a.re - b.re, a.im - b.im}; }

  CplxRat eval(const Rational& t) const { return {re.eval(t), im.eval(t)}; }
};

bool is_zero(const TCplx& c) { return c.re.is_zero() && c.im.is_zero(); }

HermTable<TCplx> lift(const HermPoly& Q) {
  HermTable<TCplx> out;
  for (const auto& [k, c] : Q.coeffs())
    out.emplace(k, TCplx{RatPoly::constant(c.re()), RatPoly::constant(c.im())});
  return out;
}

HermTable<TCplx> symbolic_remainder(const HermPoly& Q) {
  return divide_by_sphere(lift(Q), Q.dim(), 0,
                          [](const TCplx& c) { return TCplx{c.re.shifted(), c.im.shifted()}; })
      .second;
}

TCplx lookup(const HermTable<TCplx>& table, const HermKey& key) {
  const auto it = table.find(key);
  return it == table.end() ? TCplx{} : it->second;
}

/// gcd over all cross determinants A_i B_j - A_j B_i; zero polynomial when
/// every determinant vanishes identically.
RatPoly determinant_gcd(const HermTable<TCplx>& ra, const HermTable<TCplx>& rb) {
  std::vector<HermKey> keys;
  for (const auto& [k, c] : ra) keys.push_back(k);
  for (const auto& [k, c] : rb)
    if (!ra.contains(k)) keys.push_back(k);

  RatPoly g;
  for (const auto& [ki, bi] : rb) {
    const TCplx ai = lookup(ra, ki);
    for (const auto& kj : keys) {
      if (kj == ki) continue;
      if (rb.contains(kj) && kj < ki) continue;  // pair already seen
      const TCplx det = ai * lookup(rb, kj) - lookup(ra, kj) * bi;
      g = gcd(g, det.re);
      g = gcd(g, det.im);
      if (g.degree() == 0) return g;
    }
  }
  return g;
}

struct RatioSource {
  TCplx a;
  TCplx b;
};

/// T(t) = A_i(t) / B_i(t) for a key with B_i nonvanishing at the given points.
std::optional<RatioSource> pick_ratio(const HermTable<TCplx>& ra, const HermTable<TCplx>& rb,
                                      std::initializer_list<Rational> points) {
  for (const auto& [k, b] : rb) {
    const bool ok = std::all_of(points.begin(), points.end(),
                                [&](const Rational& t) { return !b.eval(t).is_zero(); });
    if (ok) return RatioSource{lookup(ra, k), b};
  }
  return std::nullopt;
}

Rational real_ratio(const RatioSource& src, const Rational& t) {
  CplxRat v = src.a.eval(t);
  v /= src.b.eval(t);
  if (!v.is_real()) throw InternalInvariant("fold ratio is not real");
  return v.re();
}

bool holds_exactly(const HermPoly& A, const HermPoly& B, const Rational& t, const Rational& T) {
  return reduce_mod_sphere(A - T * B, t).remainder.is_zero();
}

/// Max deviation of ||f||^2 from T over seeded points on the sphere ||z||^2 = t.
double sphere_deviation(const RationalMap& f, double t, double T) {
  std::mt19937_64 rng(0x5f01d);
  std::normal_distribution<double> gauss;
  const std::size_t n = f.dim();
  double worst = 0;
  for (int s = 0; s < 64; ++s) {
    std::vector<std::complex<double>> z(n);
    double norm = 0;
    for (auto& zi : z) {
      zi = {gauss(rng), gauss(rng)};
      norm += std::norm(zi);
    }
    const double scale = std::sqrt(t / norm);
    for (auto& zi : z) zi *= scale;
    try {
      double v = 0;
      for (const auto& w : eval_float(f, z)) v += std::norm(w);
      worst = std::max(worst, std::abs(v - T) / std::max(1.0, T));
    } catch (const PoleProximity&) {
    }
  }
  return worst;
}

}  // namespace

FoldProfile fold_profile(const RationalMap& f) {
  f.require_regular_at_origin();
  FoldProfile profile;
  if (auto inf = detect_infty_fold(f)) {
    profile.kind = FoldProfile::Kind::Infinite;
    profile.C = std::move(inf->C);
    profile.reducible_witness = inf->reducible_witness;
    return profile;
  }
  if (f.dim() == 0) return profile;

  const HermPoly A = squared_norm(f.numerator());
  const HermPoly B = squared_norm(f.denominator());
  const auto ra = symbolic_remainder(A);
  const auto rb = symbolic_remainder(B);

  const RatPoly g = determinant_gcd(ra, rb);
  if (g.is_zero())
    throw PreconditionError(
        "remainders are proportional for every t but no infinite-fold identity exists; "
        "input is not in reduced terms");
  if (g.degree() <= 0) return profile;

  for (const auto& root : isolate_real_roots(g)) {
    if (const auto* t = std::get_if<Rational>(&root)) {
      const auto src = pick_ratio(ra, rb, {*t});
      if (!src) continue;  // |q|^2 remainder vanishes identically here
      const Rational T = real_ratio(*src, *t);
      if (sgn(T) <= 0) continue;
      if (!holds_exactly(A, B, *t, T)) throw InternalInvariant("fold root failed exact validation");
      profile.entries.push_back({*t, T});
      continue;
    }
    const RootInterval iv = refine_root(g, std::get<RootInterval>(root), 64);
    if (iv.lo == iv.hi) {
      // bisection landed on the root itself, which is then rational
      const auto src = pick_ratio(ra, rb, {iv.lo});
      if (!src) continue;
      const Rational T = real_ratio(*src, iv.lo);
      if (sgn(T) <= 0 || !holds_exactly(A, B, iv.lo, T)) continue;
      profile.entries.push_back({iv.lo, T});
      continue;
    }
    const auto src = pick_ratio(ra, rb, {iv.lo, iv.hi});
    if (!src) continue;
    Rational T_lo = real_ratio(*src, iv.lo);
    Rational T_hi = real_ratio(*src, iv.hi);
    if (T_hi < T_lo) std::swap(T_lo, T_hi);
    if (sgn(T_hi) <= 0) continue;
    const double t_mid = to_double(iv.midpoint());
    const double T_mid = to_double(Rational((T_lo + T_hi) / 2));
    if (sphere_deviation(f, t_mid, T_mid) > 1e-9)
      throw InternalInvariant("irrational fold failed sphere sampling");
    profile.entries.push_back({iv, RootInterval{T_lo, T_hi}});
  }
  return profile;
}

// ---------------------------------------------------------------------------
// reducedness

namespace {

using CPoly = UPoly<CplxRat>;

CPoly restrict_to_line(const HoloPoly& p, const std::vector<CplxRat>& base,
                       const std::vector<CplxRat>& dir) {
  std::vector<CPoly> linear;
  for (std::size_t i = 0; i < base.size(); ++i)
    linear.emplace_back(std::vector<CplxRat>{base[i], dir[i]});
  CPoly out;
  for (const auto& [alpha, c] : p.terms()) {
    CPoly term = CPoly::constant(c);
    for (std::size_t i = 0; i < alpha.size(); ++i)
      for (int e = 0; e < alpha[i]; ++e) term = term * linear[i];
    out += term;
  }
  return out;
}

}  // namespace

bool probably_reduced(const RationalMap& f, std::uint64_t seed) {
  if (f.denominator().degree() <= 0) return true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  auto part = [&] {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };
  auto draw = [&] {
    Rational re = part();
    return CplxRat(std::move(re), part());
  };
  const std::size_t n = f.dim();
  for (int line = 0; line < 3; ++line) {
    std::vector<CplxRat> base(n), dir(n);
    for (auto& b : base) b = draw();
    for (auto& d : dir) d = draw();
    CPoly g = restrict_to_line(f.denominator(), base, dir);
    for (const auto& entry : f.numerator().entries()) {
      if (g.degree() <= 0) break;
      g = gcd(g, restrict_to_line(entry.poly, base, dir));
    }
    if (g.degree() <= 0) return true;
  }
  return false;
}

}  // namespace spheremap
