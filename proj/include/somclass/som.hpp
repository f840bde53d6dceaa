#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

namespace somclass {

struct SomConfig {
    int clusters = 5;               // j
    int dim = 0;                    // k, must match the feature rows
    double initial_rate = 0.5;      // alpha(0), in (0, 1]
    int epochs = 500;               // e
    std::uint64_t seed = 1;
    double convergence_eps = 1e-6;  // early-stop threshold on max weight delta
};

struct SomModel {
    Eigen::MatrixXd weights;  // clusters x dim
    bool trained = false;
    int epochs_run = 0;
    double final_rate = 0.0;
    bool converged = false;
    std::vector<long> win_counts;  // per cluster, cumulative over training
};

/// One record per completed training epoch.
struct EpochTrace {
    int epoch = 0;           // 1-based
    double rate = 0.0;       // rate used during this epoch
    double max_delta = 0.0;  // max absolute weight change over the epoch
    std::vector<long> wins;  // per-cluster win counts within the epoch
};

/// Validates config fields; throws InvalidConfig.
void validate(const SomConfig& config);

/// Fresh untrained model with weights drawn uniformly from [0, 1) by the
/// seeded splitmix64 stream in row-major order.
SomModel init_som(const SomConfig& config);

/// Index of the weight row with minimal squared distance to the sample;
/// ties resolve to the lowest index. Throws DimensionMismatch.
Eigen::Index winner(const Eigen::Ref<const Eigen::MatrixXd>& weights,
                    const Eigen::Ref<const Eigen::VectorXd>& sample);

/// Moves only the winning row toward the sample: W <- W + rate (x - W).
/// Throws IndexOutOfRange.
void update_winner(Eigen::Ref<Eigen::MatrixXd> weights, Eigen::Index win,
                   const Eigen::Ref<const Eigen::VectorXd>& sample, double rate);

/// Halves the learning rate for the next epoch.
inline double decay_rate(double rate) { return 0.5 * rate; }

/// Full training pass: samples are presented in fixed column order each
/// epoch, only winners move, and the rate halves after every epoch.
/// Stops early once the maximum absolute weight change over an entire
/// epoch falls below config.convergence_eps. Throws DimensionMismatch /
/// InvalidConfig.
SomModel train(const Eigen::MatrixXd& x, const SomConfig& config,
               std::vector<EpochTrace>* trace = nullptr);

/// Same as train() but starting from caller-supplied weights instead of
/// the seeded initialization.
SomModel train_with_initial(const Eigen::MatrixXd& x, const SomConfig& config,
                            Eigen::MatrixXd initial_weights,
                            std::vector<EpochTrace>* trace = nullptr);

/// Winner index per column of x. Throws ModelNotTrained / DimensionMismatch.
std::vector<int> assign(const SomModel& model, const Eigen::MatrixXd& x);

}  // namespace somclass
