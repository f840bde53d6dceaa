#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "somclass/errors.hpp"
#include "somclass/evaluation.hpp"
#include "somclass/rng.hpp"

using namespace somclass;

namespace {

const std::vector<std::string> kFiveClasses = {"flower", "animal", "car", "river",
                                               "mountain"};

// Cluster-by-class counts from the published five-class benchmark run.
Eigen::MatrixXi benchmark_counts() {
    Eigen::MatrixXi counts(5, 5);
    counts << 47, 1, 2, 0, 0,
              3, 44, 1, 1, 1,
              0, 2, 47, 0, 1,
              1, 3, 1, 40, 5,
              1, 1, 0, 4, 44;
    return counts;
}

// Expands a count table into (predicted, truth) label sequences.
std::pair<std::vector<int>, std::vector<int>> labels_from(const Eigen::MatrixXi& counts) {
    std::vector<int> predicted;
    std::vector<int> truth;
    for (int p = 0; p < counts.rows(); ++p) {
        for (int t = 0; t < counts.cols(); ++t) {
            for (int n = 0; n < counts(p, t); ++n) {
                predicted.push_back(p);
                truth.push_back(t);
            }
        }
    }
    return {predicted, truth};
}

ClusterMapping identity_mapping(int n) {
    ClusterMapping mapping;
    for (int i = 0; i < n; ++i) mapping.to_class.push_back(i);
    return mapping;
}

}  // namespace

TEST_CASE("perfect clustering gives a diagonal table") {
    std::vector<int> labels;
    for (int c = 0; c < 5; ++c) labels.insert(labels.end(), 50, c);
    const ConfusionMatrix cm = confusion(labels, labels, 5);
    for (int p = 0; p < 5; ++p) {
        for (int t = 0; t < 5; ++t) {
            CHECK(cm.counts(p, t) == (p == t ? 50 : 0));
        }
    }
    const EvaluationReport report = accuracy(cm, map_clusters(cm));
    CHECK(report.overall_accuracy == 100.0);
    for (const double a : report.per_class_accuracy) CHECK(a == 100.0);
}

TEST_CASE("five-class benchmark counts reproduce exactly") {
    const Eigen::MatrixXi counts = benchmark_counts();
    const auto [predicted, truth] = labels_from(counts);
    const ConfusionMatrix cm = confusion(predicted, truth, 5, 5, kFiveClasses);
    CHECK(cm.counts == counts);
    CHECK(cm.counts.row(0)(0) == 47);
    CHECK(cm.total() == 250);

    const ClusterMapping mapping = map_clusters(cm);
    CHECK(mapping.to_class == std::vector<int>{0, 1, 2, 3, 4});
    const EvaluationReport report = accuracy(cm, mapping);
    CHECK(report.correct_total == 222);
    CHECK(truncated_percent(report.overall_accuracy) == 88);
}

TEST_CASE("empty label sequences produce a zero table") {
    const ConfusionMatrix cm = confusion({}, {}, 5);
    CHECK(cm.counts.isZero());
    CHECK(cm.total() == 0);
}

TEST_CASE("diagonally dominant tables map to the identity") {
    Eigen::MatrixXi counts(3, 3);
    counts << 9, 1, 0,
              0, 8, 1,
              1, 0, 7;
    ConfusionMatrix cm;
    cm.counts = counts;
    cm.class_names = {"a", "b", "c"};
    CHECK(map_clusters(cm).to_class == std::vector<int>{0, 1, 2});
}

TEST_CASE("permuted diagonal maps back through the inverse permutation") {
    // cluster p holds the mass of class perm[p]
    const int perm[5] = {2, 4, 0, 3, 1};
    Eigen::MatrixXi counts = Eigen::MatrixXi::Zero(5, 5);
    for (int p = 0; p < 5; ++p) counts(p, perm[p]) = 10 + p;
    ConfusionMatrix cm;
    cm.counts = counts;
    cm.class_names = kFiveClasses;
    const ClusterMapping mapping = map_clusters(cm);
    for (int p = 0; p < 5; ++p) CHECK(mapping.to_class[p] == perm[p]);
    CHECK(accuracy(cm, mapping).correct_total == counts.sum());
}

TEST_CASE("dead clusters stay injective and cost nothing") {
    Eigen::MatrixXi counts(3, 3);
    counts << 5, 0, 0,
              0, 0, 0,
              0, 0, 6;
    ConfusionMatrix cm;
    cm.counts = counts;
    cm.class_names = {"a", "b", "c"};
    const ClusterMapping mapping = map_clusters(cm);
    const long total = accuracy(cm, mapping).correct_total;
    CHECK(total == 11);
    CHECK(total == oracles::best_assignment_total(counts));
    // no duplicate classes
    CHECK(mapping.to_class[0] != mapping.to_class[2]);
}

TEST_CASE("mapping equals the exhaustive oracle on random tables") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const int clusters = 2 + static_cast<int>(rng.next() % 5);
        const int classes = 2 + static_cast<int>(rng.next() % 5);
        Eigen::MatrixXi counts(clusters, classes);
        for (int p = 0; p < clusters; ++p) {
            for (int t = 0; t < classes; ++t) {
                counts(p, t) = static_cast<int>(rng.next() % 40);
            }
        }
        ConfusionMatrix cm;
        cm.counts = counts;
        for (int t = 0; t < classes; ++t) cm.class_names.push_back("c" + std::to_string(t));
        const ClusterMapping mapping = map_clusters(cm);
        long total = 0;
        std::vector<bool> used(static_cast<std::size_t>(classes), false);
        for (int p = 0; p < clusters; ++p) {
            const int t = mapping.to_class[static_cast<std::size_t>(p)];
            if (t >= 0) {
                CHECK(!used[static_cast<std::size_t>(t)]);
                used[static_cast<std::size_t>(t)] = true;
                total += counts(p, t);
            }
        }
        CHECK(total == oracles::best_assignment_total(counts));
    }
}

TEST_CASE("published accuracy column reproduces under truncation") {
    const long sums[6] = {178, 222, 200, 153, 186, 178};
    const int displays[6] = {71, 88, 80, 61, 74, 71};
    for (int i = 0; i < 6; ++i) {
        Eigen::MatrixXi counts = Eigen::MatrixXi::Zero(5, 5);
        counts(0, 0) = static_cast<int>(sums[i]);
        counts(1, 0) = static_cast<int>(250 - sums[i]);
        ConfusionMatrix cm;
        cm.counts = counts;
        cm.class_names = kFiveClasses;
        const EvaluationReport report = accuracy(cm, identity_mapping(5));
        CHECK(report.image_total == 250);
        CHECK(report.correct_total == sums[i]);
        CHECK(truncated_percent(report.overall_accuracy) == displays[i]);
    }
}

TEST_CASE("accuracy ignores a simultaneous cluster permutation") {
    const Eigen::MatrixXi counts = benchmark_counts();
    ConfusionMatrix cm;
    cm.counts = counts;
    cm.class_names = kFiveClasses;
    const EvaluationReport base = accuracy(cm, map_clusters(cm));

    const int perm[5] = {3, 0, 4, 2, 1};
    ConfusionMatrix shuffled;
    shuffled.counts.resize(5, 5);
    shuffled.class_names = kFiveClasses;
    for (int p = 0; p < 5; ++p) shuffled.counts.row(perm[p]) = counts.row(p);
    const EvaluationReport permuted = accuracy(shuffled, map_clusters(shuffled));

    CHECK(base.overall_accuracy == permuted.overall_accuracy);
    CHECK(base.per_class_accuracy == permuted.per_class_accuracy);
}

TEST_CASE("mapped total never exceeds the table total") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::MatrixXi counts(4, 4);
        for (int p = 0; p < 4; ++p) {
            for (int t = 0; t < 4; ++t) {
                counts(p, t) = static_cast<int>(rng.next() % 20);
            }
        }
        ConfusionMatrix cm;
        cm.counts = counts;
        cm.class_names = {"a", "b", "c", "d"};
        const EvaluationReport report = accuracy(cm, map_clusters(cm));
        CHECK(report.correct_total <= report.image_total);
    }
}

TEST_CASE("error paths") {
    CHECK_THROWS_WITH_AS(confusion({0}, {0, 1}, 2), doctest::Contains("LengthMismatch"),
                         Error);
    CHECK_THROWS_WITH_AS(confusion({5}, {0}, 2), doctest::Contains("LabelOutOfRange"),
                         Error);
    CHECK_THROWS_WITH_AS(confusion({0}, {-1}, 2), doctest::Contains("LabelOutOfRange"),
                         Error);
    const ConfusionMatrix empty = confusion({}, {}, 3);
    CHECK_THROWS_WITH_AS(accuracy(empty, identity_mapping(3)),
                         doctest::Contains("EmptyMatrix"), Error);
}
