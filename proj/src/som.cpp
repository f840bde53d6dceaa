#include "somclass/som.hpp"

#include <string>

#include "somclass/errors.hpp"
#include "somclass/rng.hpp"

namespace somclass {

void validate(const SomConfig& config) {
    if (config.clusters < 1) {
        throw Error(Errc::invalid_config, "clusters must be >= 1");
    }
    if (config.dim < 1) {
        throw Error(Errc::invalid_config, "dim must be >= 1");
    }
    if (config.epochs < 1) {
        throw Error(Errc::invalid_config, "epochs must be >= 1");
    }
    if (!(config.initial_rate > 0.0) || config.initial_rate > 1.0) {
        throw Error(Errc::invalid_config, "initial rate must be in (0, 1]");
    }
    if (!(config.convergence_eps > 0.0)) {
        throw Error(Errc::invalid_config, "convergence eps must be > 0");
    }
}

SomModel init_som(const SomConfig& config) {
    validate(config);
    SomModel model;
    model.weights.resize(config.clusters, config.dim);
    SplitMix64 rng(config.seed);
    for (Eigen::Index r = 0; r < model.weights.rows(); ++r) {
        for (Eigen::Index c = 0; c < model.weights.cols(); ++c) {
            model.weights(r, c) = rng.next_double();
        }
    }
    model.win_counts.assign(static_cast<std::size_t>(config.clusters), 0);
    return model;
}

Eigen::Index winner(const Eigen::Ref<const Eigen::MatrixXd>& weights,
                    const Eigen::Ref<const Eigen::VectorXd>& sample) {
    if (weights.cols() != sample.size()) {
        throw Error(Errc::dimension_mismatch,
                    "sample size " + std::to_string(sample.size()) +
                        " != weight columns " + std::to_string(weights.cols()));
    }
    Eigen::Index best = 0;
    double best_dist = (weights.row(0).transpose() - sample).squaredNorm();
    for (Eigen::Index r = 1; r < weights.rows(); ++r) {
        const double dist = (weights.row(r).transpose() - sample).squaredNorm();
        if (dist < best_dist) {
            best = r;
            best_dist = dist;
        }
    }
    return best;
}

void update_winner(Eigen::Ref<Eigen::MatrixXd> weights, Eigen::Index win,
                   const Eigen::Ref<const Eigen::VectorXd>& sample, double rate) {
    if (win < 0 || win >= weights.rows()) {
        throw Error(Errc::index_out_of_range,
                    "winner index " + std::to_string(win) + " outside [0, " +
                        std::to_string(weights.rows()) + ")");
    }
    if (weights.cols() != sample.size()) {
        throw Error(Errc::dimension_mismatch,
                    "sample size " + std::to_string(sample.size()) +
                        " != weight columns " + std::to_string(weights.cols()));
    }
    weights.row(win) += rate * (sample.transpose() - weights.row(win));
}

SomModel train_with_initial(const Eigen::MatrixXd& x, const SomConfig& config,
                            Eigen::MatrixXd initial_weights,
                            std::vector<EpochTrace>* trace) {
    validate(config);
    if (x.rows() != config.dim) {
        throw Error(Errc::dimension_mismatch,
                    "feature rows " + std::to_string(x.rows()) +
                        " != configured dim " + std::to_string(config.dim));
    }
    if (initial_weights.rows() != config.clusters ||
        initial_weights.cols() != config.dim) {
        throw Error(Errc::dimension_mismatch, "initial weights shape mismatch");
    }

    SomModel model;
    model.weights = std::move(initial_weights);
    model.win_counts.assign(static_cast<std::size_t>(config.clusters), 0);

    double rate = config.initial_rate;
    Eigen::MatrixXd epoch_start(config.clusters, config.dim);
    for (int epoch = 1; epoch <= config.epochs; ++epoch) {
        epoch_start = model.weights;
        std::vector<long> wins(static_cast<std::size_t>(config.clusters), 0);
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            const Eigen::Index win = winner(model.weights, x.col(j));
            update_winner(model.weights, win, x.col(j), rate);
            ++wins[static_cast<std::size_t>(win)];
        }
        const double max_delta = (model.weights - epoch_start).cwiseAbs().maxCoeff();
        for (std::size_t c = 0; c < wins.size(); ++c) {
            model.win_counts[c] += wins[c];
        }
        if (trace) {
            trace->push_back(EpochTrace{epoch, rate, max_delta, std::move(wins)});
        }
        rate = decay_rate(rate);
        model.epochs_run = epoch;
        if (max_delta < config.convergence_eps) {
            model.converged = true;
            break;
        }
    }
    model.final_rate = rate;
    model.trained = true;
    return model;
}

SomModel train(const Eigen::MatrixXd& x, const SomConfig& config,
               std::vector<EpochTrace>* trace) {
    return train_with_initial(x, config, init_som(config).weights, trace);
}

std::vector<int> assign(const SomModel& model, const Eigen::MatrixXd& x) {
    if (!model.trained) {
        throw Error(Errc::model_not_trained, "assign requires a trained model");
    }
    if (x.rows() != model.weights.cols()) {
        throw Error(Errc::dimension_mismatch,
                    "feature rows " + std::to_string(x.rows()) +
                        " != model dim " + std::to_string(model.weights.cols()));
    }
    std::vector<int> labels(static_cast<std::size_t>(x.cols()));
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        labels[static_cast<std::size_t>(j)] =
            static_cast<int>(winner(model.weights, x.col(j)));
    }
    return labels;
}

}  // namespace somclass
