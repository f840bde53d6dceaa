#pragma once

#include <Eigen/Core>
#include <string>
#include <utility>
#include <vector>

#include "somclass/image.hpp"

namespace somclass {

inline constexpr int kHistogramBins = 256;

/// Feature vectors in columns, one per image, with stable identifiers.
struct FeatureMatrix {
    Eigen::MatrixXd values;        // rows x cols, column j = image j
    std::vector<std::string> ids;  // size == cols, all distinct

    Eigen::Index rows() const { return values.rows(); }
    Eigen::Index cols() const { return values.cols(); }
};

/// Normalized 256-bin intensity histogram: bin i holds the fraction of
/// pixels with grey level i.
Eigen::VectorXd compute_histogram(const GrayImage& img);

/// Stacks histograms into a 256 x m matrix, preserving input order.
/// Throws EmptyInput / DuplicateId.
FeatureMatrix assemble_matrix(
    const std::vector<std::pair<std::string, Eigen::VectorXd>>& histograms);

}  // namespace somclass
