#ifndef SPHEREMAP_NORMAL_FORM_HPP
#define SPHEREMAP_NORMAL_FORM_HPP

#include <Eigen/Dense>
#include <vector>

#include "spheremap/errors.hpp"
#include "spheremap/fold.hpp"
#include "spheremap/maps.hpp"

namespace spheremap {

using ComplexMatrix = Eigen::MatrixXcd;

/// f = U (h_1 + ... + h_k + 0) with h_j = sqrt(C_{d_j}) H_{d_j}.
struct NormalForm {
  std::vector<Rational> C;
  std::vector<int> degrees;
  std::vector<WeightedMap> blocks;
  std::vector<std::size_t> ell;
  ComplexMatrix U;
  /// ||f||^2 == ||h_1 + ... + h_k||^2 as exact tables
  bool gram_certificate = false;
  /// max |F - U H_padded| over coefficients
  double residual = 0;
  /// max |U* U - I|
  double unitarity_defect = 0;
};

class NotInftyFold : public Error {
 public:
  NotInftyFold(const std::string& what, FoldProfile profile)
      : Error(what), profile_(std::move(profile)) {}
  const FoldProfile& profile() const { return profile_; }

 private:
  FoldProfile profile_;
};

class GramMismatch : public Error {
 public:
  using Error::Error;
};

class RowsNotOrthonormal : public Error {
 public:
  using Error::Error;
};

/// Block decomposition of an infinite-fold polynomial map. The block data
/// and the Gram identity are exact; U is recovered in floating point.
NormalForm decompose_infty_fold(const WeightedMap& f);

/// Completes r orthonormal rows to an N x N unitary by orthonormalizing the
/// standard basis vectors against them in index order.
ComplexMatrix unitary_extend(const ComplexMatrix& V);

/// Float coefficient matrix of a weighted map: row j holds sqrt(w_j) times
/// the coefficients of poly_j over `basis`.
ComplexMatrix coefficient_matrix(const WeightedMap& f, const std::vector<MultiIndex>& basis);

}  // namespace spheremap

#endif
