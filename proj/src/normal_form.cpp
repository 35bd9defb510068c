#include "spheremap/normal_form.hpp"

#include <cmath>
#include <map>
#include <set>

#include "spheremap/factory.hpp"

namespace spheremap {

namespace {

double max_abs(const ComplexMatrix& M) { return M.size() == 0 ? 0.0 : M.cwiseAbs().maxCoeff(); }

}  // namespace

ComplexMatrix coefficient_matrix(const WeightedMap& f, const std::vector<MultiIndex>& basis) {
  std::map<MultiIndex, Eigen::Index> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], static_cast<Eigen::Index>(i));
  const auto rows = static_cast<Eigen::Index>(f.target_dim());
  ComplexMatrix M = ComplexMatrix::Zero(rows, static_cast<Eigen::Index>(basis.size()));
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& e = f.entries()[static_cast<std::size_t>(r)];
    const double scale = std::sqrt(to_double(e.weight));
    for (const auto& [alpha, c] : e.poly.terms()) M(r, pos.at(alpha)) = scale * c.to_complex();
  }
  return M;
}

ComplexMatrix unitary_extend(const ComplexMatrix& V) {
  const Eigen::Index r = V.rows();
  const Eigen::Index N = V.cols();
  if (r > N) throw RowsNotOrthonormal("more rows than columns");
  if (max_abs(V * V.adjoint() - ComplexMatrix::Identity(r, r)) > 1e-10)
    throw RowsNotOrthonormal("rows are not orthonormal within 1e-10");

  ComplexMatrix U(N, N);
  U.topRows(r) = V;
  Eigen::Index filled = r;
  // some standard vector keeps at least 1/N of its mass outside any proper
  // subspace, so this threshold never stalls
  const double accept = 1.0 / (2.0 * static_cast<double>(N));
  for (Eigen::Index k = 0; k < N && filled < N; ++k) {
    Eigen::RowVectorXcd v = Eigen::RowVectorXcd::Zero(N);
    v(k) = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index i = 0; i < filled; ++i) {
        const std::complex<double> proj = v.dot(U.row(i));  // sum conj(u_j) v_j
        v -= std::conj(proj) * U.row(i);
      }
    const double mass = v.squaredNorm();
    if (mass <= accept) continue;
    U.row(filled++) = v / std::sqrt(mass);
  }
  if (filled < N) throw InternalInvariant("unitary completion stalled");
  return U;
}

NormalForm decompose_infty_fold(const WeightedMap& f) {
  const auto inf = detect_infty_fold(f);
  if (!inf) throw NotInftyFold("map is not an infinite-fold sphere map", fold_profile(f));

  const std::size_t n = f.dim();
  NormalForm nf;
  nf.C = inf->C;
  WeightedMap H(n, {});
  for (std::size_t d = 0; d < nf.C.size(); ++d) {
    if (sgn(nf.C[d]) == 0) continue;
    if (sgn(nf.C[d]) < 0) throw InternalInvariant("negative infinite-fold coefficient");
    const int deg = static_cast<int>(d);
    nf.degrees.push_back(deg);
    nf.blocks.push_back(homogeneous_map(n, deg, nf.C[d]));
    nf.ell.push_back(nf.blocks.back().target_dim());
    H = map_direct_sum(H, nf.blocks.back());
  }
  nf.gram_certificate = squared_norm(f) == squared_norm(H);
  if (!nf.gram_certificate) throw GramMismatch("block sum does not reproduce the squared norm");

  std::vector<std::size_t> nonzero, zero;
  for (std::size_t j = 0; j < f.target_dim(); ++j)
    (f.entries()[j].poly.is_zero() ? zero : nonzero).push_back(j);
  std::vector<WeightedEntry> kept;
  for (auto j : nonzero) kept.push_back(f.entries()[j]);
  const WeightedMap fnz(n, kept);

  std::set<MultiIndex> monomials;
  for (const WeightedMap* m : {&fnz, static_cast<const WeightedMap*>(&H)})
    for (const auto& e : m->entries())
      for (const auto& [alpha, c] : e.poly.terms()) monomials.insert(alpha);
  const std::vector<MultiIndex> basis(monomials.begin(), monomials.end());

  const ComplexMatrix F = coefficient_matrix(fnz, basis);
  const ComplexMatrix Hm = coefficient_matrix(H, basis);
  const Eigen::Index L = Hm.rows();
  const Eigen::Index M = F.rows();
  if (L > M) throw InternalInvariant("more block rows than nonzero components");

  // F = V Hm with V an isometry; Hm has orthogonal rows
  const ComplexMatrix V = L == 0 ? ComplexMatrix(M, 0)
                                 : ComplexMatrix(F * Hm.adjoint() * (Hm * Hm.adjoint()).inverse());
  const ComplexMatrix W = unitary_extend(V.adjoint());  // first L rows are V*
  const ComplexMatrix Unz = W.adjoint();

  const auto N = static_cast<Eigen::Index>(f.target_dim());
  nf.U = ComplexMatrix::Zero(N, N);
  for (Eigen::Index i = 0; i < M; ++i) {
    const auto row = static_cast<Eigen::Index>(nonzero[static_cast<std::size_t>(i)]);
    nf.U.row(row).head(M) = Unz.row(i);
  }
  for (std::size_t z = 0; z < zero.size(); ++z)
    nf.U(static_cast<Eigen::Index>(zero[z]), M + static_cast<Eigen::Index>(z)) = 1.0;

  ComplexMatrix Hpad = ComplexMatrix::Zero(N, Hm.cols());
  Hpad.topRows(L) = Hm;
  const ComplexMatrix Ffull = coefficient_matrix(f, basis);
  nf.residual = max_abs(Ffull - nf.U * Hpad);
  nf.unitarity_defect = max_abs(nf.U.adjoint() * nf.U - ComplexMatrix::Identity(N, N));
  return nf;
}

}  // namespace spheremap
