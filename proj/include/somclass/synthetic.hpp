#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "somclass/histogram.hpp"

namespace somclass {

struct SynthSpec {
    int classes = 5;
    int per_class = 50;
    int dim = kHistogramBins;
    double separation = 0.15;  // required minimum inter-centroid distance
    double noise = 0.0;        // per-bin jitter amplitude
    std::uint64_t seed = 1;
};

struct SynthDataset {
    FeatureMatrix features;  // dim x (classes * per_class)
    std::vector<int> labels;
    std::vector<std::string> class_names;
};

/// Deterministic histogram-space corpus: class c concentrates probability
/// mass uniformly on bins [c*dim/classes, (c+1)*dim/classes); each sample
/// adds uniform jitter of amplitude `noise` per bin, clamps at zero and
/// renormalizes to sum 1. Throws InvalidSpec, including when the band
/// construction cannot meet the requested separation.
SynthDataset generate(const SynthSpec& spec);

}  // namespace somclass
