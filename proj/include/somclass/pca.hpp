#pragma once

#include <Eigen/Core>

#include "somclass/histogram.hpp"

namespace somclass {

/// Mean vector plus the top-k eigenvectors of the unnormalized covariance
/// of the mean-centered training columns.
struct PcaModel {
    Eigen::VectorXd mean;         // feature-space mean over training columns
    Eigen::MatrixXd basis;        // rows x k, orthonormal columns
    Eigen::VectorXd eigenvalues;  // k values, descending, >= 0
    int k = 0;
};

/// Fits on a rows x m matrix (throws BadDimension / TooFewImages). The
/// covariance is the plain sum of centered outer products, without a 1/m
/// factor; eigenvectors are unaffected by that scaling.
PcaModel fit_pca(const Eigen::MatrixXd& x, int k);
PcaModel fit_pca(const FeatureMatrix& x, int k);

/// Projects columns into the retained basis: column j of the result is
/// basis^T (x_j - mean). Throws DimensionMismatch.
Eigen::MatrixXd project_pca(const PcaModel& model, const Eigen::MatrixXd& x);
FeatureMatrix project_pca(const PcaModel& model, const FeatureMatrix& x);

}  // namespace somclass
