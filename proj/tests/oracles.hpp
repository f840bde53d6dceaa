#pragma once

// Test-only reference computations. Everything here is independent of the
// library's decomposition code paths: roots come from the characteristic
// polynomial (determinant evaluations plus bisection), assignments from an
// exhaustive recursion, and the SOM reference from a scalar re-simulation.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "somclass/rng.hpp"

namespace oracles {

inline Eigen::MatrixXd random_matrix(Eigen::Index rows, Eigen::Index cols,
                                     somclass::SplitMix64& rng) {
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            m(r, c) = 2.0 * rng.next_double() - 1.0;
        }
    }
    return m;
}

inline Eigen::MatrixXd random_symmetric(Eigen::Index n, somclass::SplitMix64& rng) {
    const Eigen::MatrixXd m = random_matrix(n, n, rng);
    return 0.5 * (m + m.transpose());
}

/// Eigenvalues of a symmetric 2x2 via the quadratic formula, descending.
inline std::vector<double> symmetric2_eigenvalues(double a, double b, double c) {
    const double mean = 0.5 * (a + c);
    const double root = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
    return {mean + root, mean - root};
}

/// Eigenvalues of a symmetric 3x3 via the trigonometric cubic formula,
/// descending.
inline std::vector<double> symmetric3_eigenvalues(const Eigen::Matrix3d& a) {
    const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
    if (p1 == 0.0) {
        std::vector<double> diag{a(0, 0), a(1, 1), a(2, 2)};
        std::sort(diag.rbegin(), diag.rend());
        return diag;
    }
    const double q = a.trace() / 3.0;
    const double p2 = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) +
                      (a(2, 2) - q) * (a(2, 2) - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    const Eigen::Matrix3d b = (a - q * Eigen::Matrix3d::Identity()) / p;
    const double r = std::clamp(b.determinant() / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double eig1 = q + 2.0 * p * std::cos(phi);
    const double eig3 = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
    return {eig1, 3.0 * q - eig1 - eig3, eig3};
}

/// All n real roots of det(A - x I) for a symmetric matrix, found by sign
/// scanning over the Gershgorin interval plus bisection. Throws if the
/// grid cannot isolate n simple roots (clustered spectra).
inline std::vector<double> charpoly_roots(const Eigen::MatrixXd& a) {
    const Eigen::Index n = a.rows();
    const auto poly = [&](double x) {
        return (a - x * Eigen::MatrixXd::Identity(n, n)).determinant();
    };

    double radius = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        radius = std::max(radius, a.row(i).cwiseAbs().sum());
    }
    const double lo = -radius - 1.0;
    const double hi = radius + 1.0;

    for (int points = 1 << 12; points <= (1 << 20); points *= 2) {
        std::vector<double> roots;
        double prev_x = lo;
        double prev_p = poly(lo);
        for (int g = 1; g <= points && static_cast<Eigen::Index>(roots.size()) < n; ++g) {
            const double x = lo + (hi - lo) * g / points;
            const double p = poly(x);
            if (p == 0.0) {
                roots.push_back(x);
            } else if (prev_p != 0.0 && std::signbit(p) != std::signbit(prev_p)) {
                double a_x = prev_x;
                double b_x = x;
                double a_p = prev_p;
                for (int it = 0; it < 200 && b_x - a_x > 0.0; ++it) {
                    const double mid = 0.5 * (a_x + b_x);
                    const double mid_p = poly(mid);
                    if (mid_p == 0.0 || std::signbit(mid_p) == std::signbit(a_p)) {
                        a_x = mid;
                        a_p = mid_p;
                    } else {
                        b_x = mid;
                    }
                    if (mid_p == 0.0) break;
                }
                roots.push_back(0.5 * (a_x + b_x));
            }
            prev_x = x;
            prev_p = p;
        }
        if (static_cast<Eigen::Index>(roots.size()) == n) {
            std::sort(roots.rbegin(), roots.rend());
            return roots;
        }
    }
    throw std::runtime_error("characteristic polynomial oracle: roots not isolated");
}

/// Maximum total over all injective cluster->class assignments, by
/// exhaustive recursion (each cluster maps to an unused class or stays
/// unmapped).
inline long best_assignment_total(const Eigen::MatrixXi& counts, int cluster = 0,
                                  unsigned used = 0) {
    if (cluster == counts.rows()) return 0;
    long best = best_assignment_total(counts, cluster + 1, used);  // unmapped
    for (int t = 0; t < counts.cols(); ++t) {
        if (used & (1u << t)) continue;
        best = std::max(best, counts(cluster, t) + best_assignment_total(
                                                       counts, cluster + 1,
                                                       used | (1u << t)));
    }
    return best;
}

/// Scalar re-simulation of single-cluster training on 1-D samples with
/// per-epoch rate halving; returns the weight after each epoch.
inline std::vector<double> scalar_som_reference(double w0, const std::vector<double>& xs,
                                                double alpha0, int epochs) {
    std::vector<double> history;
    double w = w0;
    double rate = alpha0;
    for (int e = 0; e < epochs; ++e) {
        for (const double x : xs) {
            w = w + rate * (x - w);
        }
        history.push_back(w);
        rate *= 0.5;
    }
    return history;
}

}  // namespace oracles
