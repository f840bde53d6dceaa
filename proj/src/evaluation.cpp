#include "somclass/evaluation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "somclass/errors.hpp"

namespace somclass {

int ClusterMapping::cluster_for(int class_index) const {
    for (std::size_t p = 0; p < to_class.size(); ++p) {
        if (to_class[p] == class_index) return static_cast<int>(p);
    }
    return -1;
}

ConfusionMatrix confusion(const std::vector<int>& predicted,
                          const std::vector<int>& truth, int clusters, int classes,
                          std::vector<std::string> class_names) {
    if (predicted.size() != truth.size()) {
        throw Error(Errc::length_mismatch,
                    std::to_string(predicted.size()) + " predictions vs " +
                        std::to_string(truth.size()) + " truth labels");
    }
    if (classes == 0) classes = clusters;
    if (clusters < 1 || classes < 1) {
        throw Error(Errc::label_out_of_range, "cluster/class counts must be >= 1");
    }

    ConfusionMatrix cm;
    cm.counts = Eigen::MatrixXi::Zero(clusters, classes);
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        const int p = predicted[i];
        const int t = truth[i];
        if (p < 0 || p >= clusters) {
            throw Error(Errc::label_out_of_range,
                        "predicted label " + std::to_string(p) + " outside [0, " +
                            std::to_string(clusters) + ")");
        }
        if (t < 0 || t >= classes) {
            throw Error(Errc::label_out_of_range,
                        "truth label " + std::to_string(t) + " outside [0, " +
                            std::to_string(classes) + ")");
        }
        ++cm.counts(p, t);
    }

    if (class_names.empty()) {
        for (int t = 0; t < classes; ++t) {
            class_names.push_back("class_" + std::to_string(t));
        }
    }
    if (static_cast<int>(class_names.size()) != classes) {
        throw Error(Errc::length_mismatch, "class name count != class count");
    }
    cm.class_names = std::move(class_names);
    return cm;
}

ClusterMapping map_clusters(const ConfusionMatrix& cm) {
    const int clusters = static_cast<int>(cm.counts.rows());
    const int classes = static_cast<int>(cm.counts.cols());
    const int n = std::max(clusters, classes);

    // Square zero-padded search: permutations of 0..n-1 enumerate every
    // injective assignment; the first lexicographic maximizer wins.
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best = perm;
    long best_score = -1;
    do {
        long score = 0;
        for (int p = 0; p < clusters; ++p) {
            const int t = perm[static_cast<std::size_t>(p)];
            if (t < classes) score += cm.counts(p, t);
        }
        if (score > best_score) {
            best_score = score;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    ClusterMapping mapping;
    mapping.to_class.resize(static_cast<std::size_t>(clusters));
    for (int p = 0; p < clusters; ++p) {
        const int t = best[static_cast<std::size_t>(p)];
        mapping.to_class[static_cast<std::size_t>(p)] = t < classes ? t : -1;
    }
    return mapping;
}

EvaluationReport accuracy(const ConfusionMatrix& cm, const ClusterMapping& mapping) {
    const long total = cm.total();
    if (total == 0) {
        throw Error(Errc::empty_matrix, "no observations to score");
    }
    const int classes = static_cast<int>(cm.counts.cols());
    if (static_cast<Eigen::Index>(mapping.to_class.size()) != cm.counts.rows()) {
        throw Error(Errc::length_mismatch, "mapping size != cluster count");
    }

    EvaluationReport report;
    report.image_total = total;
    report.class_names = cm.class_names;
    report.mapping = mapping;
    for (int t = 0; t < classes; ++t) {
        const long class_total = cm.counts.col(t).sum();
        const int p = mapping.cluster_for(t);
        const long correct = p >= 0 ? cm.counts(p, t) : 0;
        report.class_totals.push_back(class_total);
        report.per_class_correct.push_back(correct);
        report.per_class_accuracy.push_back(
            class_total > 0 ? 100.0 * static_cast<double>(correct) /
                                  static_cast<double>(class_total)
                            : 0.0);
        report.correct_total += correct;
    }
    report.overall_accuracy = 100.0 * static_cast<double>(report.correct_total) /
                              static_cast<double>(total);
    return report;
}

}  // namespace somclass
