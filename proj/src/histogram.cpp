#include "somclass/histogram.hpp"

#include <unordered_set>

#include "somclass/errors.hpp"

namespace somclass {

Eigen::VectorXd compute_histogram(const GrayImage& img) {
    const std::size_t total = img.pixels.size();
    if (total == 0) {
        throw Error(Errc::empty_image, "histogram of an image with no pixels");
    }
    Eigen::VectorXd bins = Eigen::VectorXd::Zero(kHistogramBins);
    for (const std::uint8_t value : img.pixels) {
        bins[value] += 1.0;
    }
    bins /= static_cast<double>(total);
    return bins;
}

FeatureMatrix assemble_matrix(
    const std::vector<std::pair<std::string, Eigen::VectorXd>>& histograms) {
    if (histograms.empty()) {
        throw Error(Errc::empty_input, "no histograms to assemble");
    }
    std::unordered_set<std::string> seen;
    FeatureMatrix m;
    m.values.resize(kHistogramBins, static_cast<Eigen::Index>(histograms.size()));
    m.ids.reserve(histograms.size());
    for (std::size_t j = 0; j < histograms.size(); ++j) {
        const auto& [id, h] = histograms[j];
        if (!seen.insert(id).second) {
            throw Error(Errc::duplicate_id, "duplicate image id '" + id + "'");
        }
        if (h.size() != kHistogramBins) {
            throw Error(Errc::dimension_mismatch,
                        "histogram for '" + id + "' has " + std::to_string(h.size()) +
                            " bins, expected " + std::to_string(kHistogramBins));
        }
        m.values.col(static_cast<Eigen::Index>(j)) = h;
        m.ids.push_back(id);
    }
    return m;
}

}  // namespace somclass
