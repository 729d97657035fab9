#include "tendonkit/basis.hpp"

#include <string>

namespace tendonkit {

std::uint64_t multiset_coefficient(int dof_count, int degree) {
  // C(dof_count + degree, degree), saturating well above any usable size.
  std::uint64_t result = 1;
  for (int i = 1; i <= degree; ++i) {
    result = result * static_cast<std::uint64_t>(dof_count + i) / static_cast<std::uint64_t>(i);
    if (result > (std::uint64_t{1} << 60)) return std::uint64_t{1} << 60;
  }
  return result;
}

namespace {

void emit_grade(std::vector<int>& current, int position, int remaining,
                std::vector<std::vector<int>>& out) {
  if (position == static_cast<int>(current.size()) - 1) {
    current[position] = remaining;
    out.push_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[position] = e;
    emit_grade(current, position + 1, remaining - e, out);
  }
}

}  // namespace

MonomialBasis enumerate_basis(int dof_count, int degree, std::uint64_t capacity) {
  if (dof_count < 1) throw Error(ErrorCode::DimensionMismatch, "dof_count must be >= 1");
  if (degree < 0) throw Error(ErrorCode::DimensionMismatch, "degree must be >= 0");
  const std::uint64_t count = multiset_coefficient(dof_count, degree);
  if (count > capacity)
    throw Error(ErrorCode::CapacityExceeded,
                "basis would have " + std::to_string(count) + " monomials, capacity is " +
                    std::to_string(capacity));

  MonomialBasis basis;
  basis.dof_count = dof_count;
  basis.degree = degree;
  basis.multi_indices.reserve(count);
  std::vector<int> current(dof_count, 0);
  for (int total = 0; total <= degree; ++total) emit_grade(current, 0, total, basis.multi_indices);
  return basis;
}

BasisEvaluator::BasisEvaluator(const MonomialBasis& basis)
    : basis_(basis), powers_(basis.degree + 1, basis.dof_count) {}

void BasisEvaluator::fill_powers(const Eigen::VectorXd& x) const {
  if (x.size() != basis_.dof_count)
    throw Error(ErrorCode::LengthMismatch, "point dimension does not match basis dof_count");
  powers_.row(0).setOnes();
  for (int e = 1; e <= basis_.degree; ++e)
    powers_.row(e) = powers_.row(e - 1).cwiseProduct(x.transpose());
}

double BasisEvaluator::partial_product(const std::vector<int>& alpha, int skip_a,
                                       int skip_b) const {
  double prod = 1.0;
  for (int i = 0; i < basis_.dof_count; ++i) {
    if (i == skip_a || i == skip_b) continue;
    prod *= powers_(alpha[i], i);
  }
  return prod;
}

void BasisEvaluator::values(const Eigen::VectorXd& x, Eigen::VectorXd& phi) const {
  fill_powers(x);
  phi.resize(basis_.size());
  for (int b = 0; b < basis_.size(); ++b) phi[b] = partial_product(basis_.multi_indices[b], -1, -1);
}

void BasisEvaluator::jacobian(const Eigen::VectorXd& x, Eigen::MatrixXd& dphi) const {
  fill_powers(x);
  dphi.setZero(basis_.size(), basis_.dof_count);
  for (int b = 0; b < basis_.size(); ++b) {
    const auto& alpha = basis_.multi_indices[b];
    for (int j = 0; j < basis_.dof_count; ++j) {
      if (alpha[j] == 0) continue;
      dphi(b, j) = alpha[j] * powers_(alpha[j] - 1, j) * partial_product(alpha, j, -1);
    }
  }
}

void BasisEvaluator::directional_hessian(const Eigen::VectorXd& x, const Eigen::VectorXd& dx,
                                         Eigen::MatrixXd& ddphi) const {
  if (dx.size() != basis_.dof_count)
    throw Error(ErrorCode::LengthMismatch, "direction dimension does not match basis dof_count");
  fill_powers(x);
  ddphi.setZero(basis_.size(), basis_.dof_count);
  for (int b = 0; b < basis_.size(); ++b) {
    const auto& alpha = basis_.multi_indices[b];
    for (int j = 0; j < basis_.dof_count; ++j) {
      if (alpha[j] == 0) continue;
      double acc = 0.0;
      for (int k = 0; k < basis_.dof_count; ++k) {
        if (dx[k] == 0.0) continue;
        double second;
        if (k == j) {
          if (alpha[j] < 2) continue;
          second = static_cast<double>(alpha[j]) * (alpha[j] - 1) * powers_(alpha[j] - 2, j) *
                   partial_product(alpha, j, -1);
        } else {
          if (alpha[k] == 0) continue;
          second = static_cast<double>(alpha[j]) * alpha[k] * powers_(alpha[j] - 1, j) *
                   powers_(alpha[k] - 1, k) * partial_product(alpha, j, k);
        }
        acc += second * dx[k];
      }
      ddphi(b, j) = acc;
    }
  }
}

}  // namespace tendonkit
