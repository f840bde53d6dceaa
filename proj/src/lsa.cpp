#include "somclass/lsa.hpp"

#include <string>

#include "somclass/errors.hpp"
#include "somclass/linalg.hpp"

namespace somclass {

LsaModel fit_lsa(const Eigen::MatrixXd& x, int k) {
    if (k < 1) {
        throw Error(Errc::bad_dimension, "k must be >= 1, got " + std::to_string(k));
    }
    const SvdDecomposition dec = svd(x);
    const Eigen::Index usable = dec.rank();
    if (k > usable) {
        throw Error(Errc::rank_too_low,
                    "k=" + std::to_string(k) + " exceeds numerical rank " +
                        std::to_string(usable));
    }
    LsaModel model;
    model.k = k;
    model.u_k = dec.u.leftCols(k);
    model.s_k = dec.s.head(k);
    return model;
}

LsaModel fit_lsa(const FeatureMatrix& x, int k) { return fit_lsa(x.values, k); }

Eigen::MatrixXd project_lsa(const LsaModel& model, const Eigen::MatrixXd& q) {
    if (q.rows() != model.u_k.rows()) {
        throw Error(Errc::dimension_mismatch,
                    "input has " + std::to_string(q.rows()) + " rows, model expects " +
                        std::to_string(model.u_k.rows()));
    }
    return model.s_k.cwiseInverse().asDiagonal() * (model.u_k.transpose() * q);
}

FeatureMatrix project_lsa(const LsaModel& model, const FeatureMatrix& q) {
    return FeatureMatrix{project_lsa(model, q.values), q.ids};
}

}  // namespace somclass
