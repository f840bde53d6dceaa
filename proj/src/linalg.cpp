#include "somclass/linalg.hpp"

#include <Eigen/Jacobi>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "somclass/errors.hpp"

namespace somclass {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kConvergenceScale = 1e-12;

double off_diagonal_norm(const Eigen::MatrixXd& a) {
    double sum = 0.0;
    for (Eigen::Index p = 0; p < a.rows(); ++p) {
        for (Eigen::Index q = p + 1; q < a.cols(); ++q) {
            sum += 2.0 * a(p, q) * a(p, q);
        }
    }
    return std::sqrt(sum);
}

void require_symmetric(const Eigen::MatrixXd& a) {
    if (a.rows() != a.cols()) {
        throw Error(Errc::not_symmetric,
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " matrix is not square");
    }
    for (Eigen::Index p = 0; p < a.rows(); ++p) {
        for (Eigen::Index q = p + 1; q < a.cols(); ++q) {
            const double tol = 1e-12 * std::max(1.0, std::abs(a(p, q)));
            if (std::abs(a(p, q) - a(q, p)) > tol) {
                throw Error(Errc::not_symmetric,
                            "entries (" + std::to_string(p) + "," + std::to_string(q) +
                                ") and transpose differ beyond tolerance");
            }
        }
    }
}

/// Flips each column so that its largest-magnitude entry (first such entry
/// on ties) is positive.
void canonicalize_signs(Eigen::MatrixXd& columns) {
    for (Eigen::Index j = 0; j < columns.cols(); ++j) {
        Eigen::Index i = 0;
        columns.col(j).cwiseAbs().maxCoeff(&i);
        if (columns(i, j) < 0.0) {
            columns.col(j) = -columns.col(j);
        }
    }
}

}  // namespace

EigenDecomposition jacobi_eigh(const Eigen::MatrixXd& a,
                               std::vector<double>* sweep_off_norms) {
    require_symmetric(a);
    const Eigen::Index n = a.rows();

    Eigen::MatrixXd work = 0.5 * (a + a.transpose());
    Eigen::MatrixXd vectors = Eigen::MatrixXd::Identity(n, n);

    const double norm = work.norm();
    const double threshold = kConvergenceScale * norm;

    bool converged = norm == 0.0 || n < 2 || off_diagonal_norm(work) <= threshold;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                if (work(p, q) == 0.0) continue;
                Eigen::JacobiRotation<double> rot;
                rot.makeJacobi(work(p, p), work(p, q), work(q, q));
                work.applyOnTheLeft(p, q, rot.transpose());
                work.applyOnTheRight(p, q, rot);
                work(p, q) = work(q, p) = 0.0;
                vectors.applyOnTheRight(p, q, rot);
            }
        }
        const double off = off_diagonal_norm(work);
        if (sweep_off_norms) sweep_off_norms->push_back(off);
        converged = off <= threshold;
    }
    if (!converged) {
        throw Error(Errc::no_convergence,
                    "off-diagonal norm above tolerance after " +
                        std::to_string(kMaxSweeps) + " Jacobi sweeps");
    }

    // Descending eigenvalue order; ties keep the pre-sort index order.
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
        return work(i, i) > work(j, j);
    });

    EigenDecomposition result;
    result.values.resize(n);
    result.vectors.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        result.values[j] = work(order[static_cast<std::size_t>(j)],
                                order[static_cast<std::size_t>(j)]);
        result.vectors.col(j) = vectors.col(order[static_cast<std::size_t>(j)]);
    }
    canonicalize_signs(result.vectors);
    return result;
}

Eigen::Index SvdDecomposition::rank() const {
    if (s.size() == 0) return 0;
    const double cutoff = kSvdRankCutoff * s[0];
    Eigen::Index r = 0;
    while (r < s.size() && s[r] > cutoff) ++r;
    return r;
}

SvdDecomposition svd(const Eigen::MatrixXd& x) {
    const Eigen::Index rows = x.rows();
    const Eigen::Index cols = x.cols();
    const Eigen::Index r = std::min(rows, cols);

    const Eigen::MatrixXd gram = x.transpose() * x;
    const EigenDecomposition eig = jacobi_eigh(gram);

    SvdDecomposition out;
    out.s.resize(r);
    out.v = eig.vectors.leftCols(r);
    for (Eigen::Index j = 0; j < r; ++j) {
        out.s[j] = std::sqrt(std::max(eig.values[j], 0.0));
    }

    const Eigen::Index retained = out.rank();
    out.u.resize(rows, r);
    for (Eigen::Index j = 0; j < retained; ++j) {
        out.u.col(j) = x * out.v.col(j) / out.s[j];
    }

    // Null-range columns: orthonormal completion against the columns built
    // so far, drawing candidates from the standard basis.
    Eigen::Index filled = retained;
    for (Eigen::Index cand = 0; cand < rows && filled < r; ++cand) {
        Eigen::VectorXd candidate = Eigen::VectorXd::Unit(rows, cand);
        for (Eigen::Index j = 0; j < filled; ++j) {
            candidate -= out.u.col(j).dot(candidate) * out.u.col(j);
        }
        const double len = candidate.norm();
        if (len > 1e-8) {
            candidate /= len;
            Eigen::Index i = 0;
            candidate.cwiseAbs().maxCoeff(&i);
            if (candidate[i] < 0.0) candidate = -candidate;
            out.u.col(filled++) = candidate;
        }
    }
    if (filled < r) {
        throw Error(Errc::no_convergence,
                    "could not complete an orthonormal basis for U");
    }
    return out;
}

}  // namespace somclass
