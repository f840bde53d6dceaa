#pragma once

#include <Eigen/Core>

#include "somclass/histogram.hpp"

namespace somclass {

/// Truncated SVD basis of the raw (uncentered) feature matrix.
struct LsaModel {
    Eigen::MatrixXd u_k;  // rows x k, column-orthonormal
    Eigen::VectorXd s_k;  // k singular values, strictly positive, descending
    int k = 0;
};

/// Keeps the first k singular pairs of svd(x). Throws BadDimension (k < 1)
/// or RankTooLow (fewer than k singular values above the rank cutoff).
LsaModel fit_lsa(const Eigen::MatrixXd& x, int k);
LsaModel fit_lsa(const FeatureMatrix& x, int k);

/// Fold-in projection: column j of the result is s_k^-1 u_k^T q_j.
/// Throws DimensionMismatch.
Eigen::MatrixXd project_lsa(const LsaModel& model, const Eigen::MatrixXd& q);
FeatureMatrix project_lsa(const LsaModel& model, const FeatureMatrix& q);

}  // namespace somclass
