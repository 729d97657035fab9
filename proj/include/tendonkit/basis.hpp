#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "tendonkit/error.hpp"

namespace tendonkit {

/// All monomials of `dof_count` variables with total degree <= `degree`,
/// in graded lexicographic order (constant term first). The count is the
/// multiset coefficient C(dof_count + degree, degree).
struct MonomialBasis {
  int dof_count = 0;
  int degree = 0;
  std::vector<std::vector<int>> multi_indices;

  int size() const { return static_cast<int>(multi_indices.size()); }
};

std::uint64_t multiset_coefficient(int dof_count, int degree);

MonomialBasis enumerate_basis(int dof_count, int degree, std::uint64_t capacity = 1'000'000);

/// Evaluates a basis and its derivatives at one (normalized) point.
/// Reusable scratch keeps the per-call cost at O(B * D) for values and
/// O(B * D^2) for derivative blocks.
class BasisEvaluator {
 public:
  explicit BasisEvaluator(const MonomialBasis& basis);

  /// phi[b] = prod_i x_i^alpha_bi
  void values(const Eigen::VectorXd& x, Eigen::VectorXd& phi) const;

  /// dphi(b, j) = d phi_b / d x_j
  void jacobian(const Eigen::VectorXd& x, Eigen::MatrixXd& dphi) const;

  /// ddphi(b, j) = sum_k d^2 phi_b / (d x_j d x_k) * dx_k
  void directional_hessian(const Eigen::VectorXd& x, const Eigen::VectorXd& dx,
                           Eigen::MatrixXd& ddphi) const;

 private:
  void fill_powers(const Eigen::VectorXd& x) const;
  double partial_product(const std::vector<int>& alpha, int skip_a, int skip_b) const;

  const MonomialBasis& basis_;
  mutable Eigen::MatrixXd powers_;  // (degree+1) x dof_count
};

}  // namespace tendonkit
