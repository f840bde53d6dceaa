#pragma once

#include <Eigen/Core>
#include <vector>

namespace somclass {

/// Eigenvalues sorted descending; column j of `vectors` pairs with
/// `values[j]`. Columns are orthonormal and sign-canonical (the
/// largest-magnitude entry of each column is positive), so identical
/// inputs decompose bit-identically.
struct EigenDecomposition {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};

/// X = U * S.asDiagonal() * V^T with r = min(rows, cols) retained pairs.
/// S is non-negative and non-increasing; U (rows x r) and V (cols x r)
/// are column-orthonormal.
struct SvdDecomposition {
    Eigen::MatrixXd u;
    Eigen::VectorXd s;
    Eigen::MatrixXd v;

    /// Count of singular values above the numerical-rank cutoff
    /// (sigma > 1e-10 * sigma_max).
    Eigen::Index rank() const;
};

/// Relative cutoff under which a singular value is treated as zero.
inline constexpr double kSvdRankCutoff = 1e-10;

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Sweeps rotate
/// every (p, q) pair in fixed order until the off-diagonal Frobenius norm
/// drops to 1e-12 * ||A||_F, or NoConvergence after 100 sweeps. Symmetry
/// is required up to |a_pq - a_qp| <= 1e-12 * max(1, |a_pq|), otherwise
/// NotSymmetric.
///
/// `sweep_off_norms`, when given, receives the off-diagonal Frobenius norm
/// after each completed sweep (convergence diagnostics).
EigenDecomposition jacobi_eigh(const Eigen::MatrixXd& a,
                               std::vector<double>* sweep_off_norms = nullptr);

/// Singular value decomposition through the Gram matrix: V and S come from
/// jacobi_eigh(X^T X) (eigenvalues clamped at zero before the square root);
/// U columns are X v_j / sigma_j for retained sigma, and the null-range
/// columns are completed to an orthonormal basis.
SvdDecomposition svd(const Eigen::MatrixXd& x);

}  // namespace somclass
