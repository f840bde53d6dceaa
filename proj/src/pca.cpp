#include "somclass/pca.hpp"

#include <string>

#include "somclass/errors.hpp"
#include "somclass/linalg.hpp"

namespace somclass {

PcaModel fit_pca(const Eigen::MatrixXd& x, int k) {
    if (k < 1 || k > x.rows()) {
        throw Error(Errc::bad_dimension,
                    "k=" + std::to_string(k) + " outside [1, " +
                        std::to_string(x.rows()) + "]");
    }
    if (x.cols() < 2) {
        throw Error(Errc::too_few_images,
                    "need at least 2 columns, got " + std::to_string(x.cols()));
    }

    PcaModel model;
    model.k = k;
    model.mean = x.rowwise().mean();
    const Eigen::MatrixXd centered = x.colwise() - model.mean;
    const Eigen::MatrixXd sigma = centered * centered.transpose();

    const EigenDecomposition eig = jacobi_eigh(sigma);
    model.basis = eig.vectors.leftCols(k);
    model.eigenvalues = eig.values.head(k).cwiseMax(0.0);
    return model;
}

PcaModel fit_pca(const FeatureMatrix& x, int k) { return fit_pca(x.values, k); }

Eigen::MatrixXd project_pca(const PcaModel& model, const Eigen::MatrixXd& x) {
    if (x.rows() != model.mean.size()) {
        throw Error(Errc::dimension_mismatch,
                    "input has " + std::to_string(x.rows()) + " rows, model expects " +
                        std::to_string(model.mean.size()));
    }
    const Eigen::MatrixXd centered = x.colwise() - model.mean;
    // One product per retained component: row i of a k1 projection is then
    // bit-identical to row i of any k2 > k1 projection of the same fit.
    Eigen::MatrixXd projected(model.basis.cols(), x.cols());
    for (Eigen::Index i = 0; i < model.basis.cols(); ++i) {
        projected.row(i) = model.basis.col(i).transpose() * centered;
    }
    return projected;
}

FeatureMatrix project_pca(const PcaModel& model, const FeatureMatrix& x) {
    return FeatureMatrix{project_pca(model, x.values), x.ids};
}

}  // namespace somclass
