#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace somclass {

/// Predicted-cluster (rows) by true-class (columns) count table.
struct ConfusionMatrix {
    Eigen::MatrixXi counts;
    std::vector<std::string> class_names;  // one per column

    long total() const { return counts.sum(); }
};

/// Injective cluster -> class assignment; -1 marks an unmapped cluster
/// (possible when there are more clusters than classes).
struct ClusterMapping {
    std::vector<int> to_class;

    /// Cluster mapped to `class_index`, or -1 if none.
    int cluster_for(int class_index) const;
};

struct EvaluationReport {
    std::vector<double> per_class_accuracy;  // percent, full precision
    double overall_accuracy = 0.0;           // percent, full precision
    long correct_total = 0;
    long image_total = 0;
    std::vector<long> per_class_correct;
    std::vector<long> class_totals;
    ClusterMapping mapping;
    std::vector<std::string> class_names;
};

/// Truncates a percentage toward zero for display (88.8 -> 88).
inline int truncated_percent(double percent) { return static_cast<int>(percent); }

/// Tallies predictions against ground truth. `classes` defaults to
/// `clusters` when zero. Throws LengthMismatch / LabelOutOfRange.
ConfusionMatrix confusion(const std::vector<int>& predicted,
                          const std::vector<int>& truth, int clusters,
                          int classes = 0,
                          std::vector<std::string> class_names = {});

/// Injective assignment maximizing the summed selected cells, found by
/// exhaustive search (intended for small cluster counts; cost grows
/// factorially).
ClusterMapping map_clusters(const ConfusionMatrix& cm);

/// Per-class and overall accuracy under the given mapping. Throws
/// EmptyMatrix when the table holds no observations.
EvaluationReport accuracy(const ConfusionMatrix& cm, const ClusterMapping& mapping);

}  // namespace somclass
