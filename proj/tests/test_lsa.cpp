#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include "oracles.hpp"
#include "somclass/errors.hpp"
#include "somclass/linalg.hpp"
#include "somclass/lsa.hpp"
#include "somclass/rng.hpp"

using namespace somclass;

TEST_CASE("identity fit") {
    const LsaModel model = fit_lsa(Eigen::MatrixXd::Identity(2, 2), 2);
    CHECK(model.s_k[0] == doctest::Approx(1.0));
    CHECK(model.s_k[1] == doctest::Approx(1.0));
    CHECK((model.u_k.transpose() * model.u_k - Eigen::MatrixXd::Identity(2, 2))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
}

TEST_CASE("rank-1 fit") {
    Eigen::MatrixXd x(2, 2);
    x << 1.0, 2.0, 2.0, 4.0;
    const LsaModel model = fit_lsa(x, 1);
    CHECK(model.s_k[0] == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("k beyond the rank is rejected") {
    SplitMix64 rng(12);
    const Eigen::MatrixXd x = oracles::random_matrix(256, 10, rng);
    CHECK_THROWS_WITH_AS(fit_lsa(x, 11), doctest::Contains("RankTooLow"), Error);
    CHECK_THROWS_WITH_AS(fit_lsa(x, 0), doctest::Contains("BadDimension"), Error);
    // exactly-rank-deficient inputs also refuse dimensions past the cutoff
    Eigen::MatrixXd low(2, 2);
    low << 1.0, 2.0, 2.0, 4.0;
    CHECK_THROWS_WITH_AS(fit_lsa(low, 2), doctest::Contains("RankTooLow"), Error);
}

TEST_CASE("projecting training columns reproduces V rows") {
    SplitMix64 rng(23);
    const Eigen::MatrixXd x = oracles::random_matrix(6, 4, rng);
    const SvdDecomposition dec = svd(x);
    const int k = static_cast<int>(dec.rank());
    const LsaModel model = fit_lsa(x, k);
    const Eigen::MatrixXd proj = project_lsa(model, x);
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        for (int i = 0; i < k; ++i) {
            CHECK(proj(i, j) == doctest::Approx(dec.v(j, i)).epsilon(1e-8));
        }
        CHECK(proj.col(j).norm() <= 1.0 + 1e-8);
    }
}

TEST_CASE("identity model passes the input through") {
    const LsaModel model = fit_lsa(Eigen::MatrixXd::Identity(2, 2), 2);
    Eigen::VectorXd q(2);
    q << 1.0, 0.0;
    const Eigen::MatrixXd proj = project_lsa(model, q);
    CHECK(proj(0, 0) == doctest::Approx(1.0));
    CHECK(proj(1, 0) == doctest::Approx(0.0));
}

TEST_CASE("zero vector projects to zero") {
    SplitMix64 rng(34);
    const LsaModel model = fit_lsa(oracles::random_matrix(8, 5, rng), 3);
    const Eigen::MatrixXd proj = project_lsa(model, Eigen::MatrixXd::Zero(8, 1));
    CHECK(proj.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("projection is linear") {
    SplitMix64 rng(45);
    const LsaModel model = fit_lsa(oracles::random_matrix(8, 6, rng), 4);
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::VectorXd q1 = oracles::random_matrix(8, 1, rng);
        const Eigen::VectorXd q2 = oracles::random_matrix(8, 1, rng);
        const double a = 2.0 * rng.next_double() - 1.0;
        const double b = 2.0 * rng.next_double() - 1.0;
        const Eigen::MatrixXd combined = project_lsa(model, (a * q1 + b * q2).eval());
        const Eigen::MatrixXd separate =
            a * project_lsa(model, q1) + b * project_lsa(model, q2);
        CHECK((combined - separate).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("column order of the training matrix does not change the model") {
    SplitMix64 rng(56);
    const Eigen::MatrixXd x = oracles::random_matrix(7, 5, rng);
    Eigen::MatrixXd permuted(7, 5);
    const int perm[5] = {3, 0, 4, 1, 2};
    for (int j = 0; j < 5; ++j) permuted.col(j) = x.col(perm[j]);

    const LsaModel a = fit_lsa(x, 3);
    const LsaModel b = fit_lsa(permuted, 3);
    CHECK((a.s_k - b.s_k).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((a.u_k - b.u_k).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("dimension mismatch on projection") {
    SplitMix64 rng(67);
    const LsaModel model = fit_lsa(oracles::random_matrix(8, 5, rng), 3);
    CHECK_THROWS_WITH_AS(project_lsa(model, Eigen::MatrixXd::Zero(9, 1)),
                         doctest::Contains("DimensionMismatch"), Error);
}
