#include "somclass/synthetic.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "somclass/errors.hpp"
#include "somclass/rng.hpp"

namespace somclass {

SynthDataset generate(const SynthSpec& spec) {
    if (spec.classes < 2) {
        throw Error(Errc::invalid_spec, "need at least 2 classes");
    }
    if (spec.per_class < 1) {
        throw Error(Errc::invalid_spec, "need at least 1 sample per class");
    }
    if (spec.dim < spec.classes) {
        throw Error(Errc::invalid_spec, "dim must be >= classes");
    }
    if (!(spec.separation > 0.0)) {
        throw Error(Errc::invalid_spec, "separation must be > 0");
    }
    if (spec.noise < 0.0) {
        throw Error(Errc::invalid_spec, "noise must be >= 0");
    }

    Eigen::MatrixXd centroids(spec.dim, spec.classes);
    centroids.setZero();
    for (int c = 0; c < spec.classes; ++c) {
        const int lo = static_cast<int>(static_cast<long long>(c) * spec.dim / spec.classes);
        const int hi = static_cast<int>(static_cast<long long>(c + 1) * spec.dim / spec.classes);
        centroids.col(c).segment(lo, hi - lo).setConstant(1.0 / (hi - lo));
    }

    double min_dist = std::numeric_limits<double>::infinity();
    for (int a = 0; a < spec.classes; ++a) {
        for (int b = a + 1; b < spec.classes; ++b) {
            min_dist = std::min(min_dist, (centroids.col(a) - centroids.col(b)).norm());
        }
    }
    if (min_dist + 1e-12 < spec.separation) {
        throw Error(Errc::invalid_spec,
                    "band construction yields centroid distance " +
                        std::to_string(min_dist) + " below requested separation " +
                        std::to_string(spec.separation));
    }

    SplitMix64 rng(spec.seed);
    SynthDataset out;
    const Eigen::Index m = static_cast<Eigen::Index>(spec.classes) * spec.per_class;
    out.features.values.resize(spec.dim, m);
    out.features.ids.reserve(static_cast<std::size_t>(m));
    out.labels.reserve(static_cast<std::size_t>(m));

    Eigen::Index col = 0;
    for (int c = 0; c < spec.classes; ++c) {
        out.class_names.push_back("class_" + std::to_string(c));
        for (int s = 0; s < spec.per_class; ++s, ++col) {
            Eigen::VectorXd h = centroids.col(c);
            if (spec.noise > 0.0) {
                for (int b = 0; b < spec.dim; ++b) {
                    h[b] += spec.noise * (2.0 * rng.next_double() - 1.0);
                }
                h = h.cwiseMax(0.0);
                const double sum = h.sum();
                if (sum <= 0.0) {
                    throw Error(Errc::invalid_spec,
                                "noise amplitude wiped out all probability mass");
                }
                h /= sum;
            }
            out.features.values.col(col) = h;
            out.features.ids.push_back("synth-" + std::to_string(col));
            out.labels.push_back(c);
        }
    }
    return out;
}

}  // namespace somclass
