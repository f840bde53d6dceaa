#include "somclass/cache.hpp"

#include <fstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "somclass/errors.hpp"
#include "somclass/numeric_text.hpp"

namespace somclass {

namespace {

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

}  // namespace

void write_cache(const FeatureMatrix& features, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(Errc::io_error, "cannot write cache " + path.string());
    }
    out << features.cols() << "," << features.rows() << "\n";
    for (Eigen::Index j = 0; j < features.cols(); ++j) {
        out << features.ids[static_cast<std::size_t>(j)];
        for (Eigen::Index i = 0; i < features.rows(); ++i) {
            out << "," << format_double(features.values(i, j));
        }
        out << "\n";
    }
    if (!out) {
        throw Error(Errc::io_error, "write failed for " + path.string());
    }
}

FeatureMatrix read_cache(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::missing_file, "cannot open cache " + path.string());
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw Error(Errc::bad_cache, path.string() + ": missing header");
    }
    const auto header = split_csv(line);
    if (header.size() != 2) {
        throw Error(Errc::bad_cache, path.string() + ": header must be 'count,dim'");
    }
    long count = 0;
    long dim = 0;
    try {
        count = parse_long(header[0]);
        dim = parse_long(header[1]);
    } catch (const Error&) {
        throw Error(Errc::bad_cache, path.string() + ": bad header numbers");
    }
    if (count < 1 || dim < 1) {
        throw Error(Errc::bad_cache, path.string() + ": non-positive header values");
    }

    FeatureMatrix features;
    features.values.resize(dim, count);
    features.ids.reserve(static_cast<std::size_t>(count));
    std::unordered_set<std::string> seen;
    for (long j = 0; j < count; ++j) {
        if (!std::getline(in, line)) {
            throw Error(Errc::bad_cache,
                        path.string() + ": expected " + std::to_string(count) +
                            " records, found " + std::to_string(j));
        }
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto fields = split_csv(line);
        if (static_cast<long>(fields.size()) != dim + 1) {
            throw Error(Errc::bad_cache,
                        path.string() + ": record " + std::to_string(j) + " has " +
                            std::to_string(fields.size() - 1) + " values, expected " +
                            std::to_string(dim));
        }
        std::string id(fields[0]);
        if (id.empty() || !seen.insert(id).second) {
            throw Error(Errc::bad_cache,
                        path.string() + ": empty or duplicate id in record " +
                            std::to_string(j));
        }
        for (long i = 0; i < dim; ++i) {
            try {
                features.values(i, j) = parse_double(fields[static_cast<std::size_t>(i + 1)]);
            } catch (const Error&) {
                throw Error(Errc::bad_cache,
                            path.string() + ": bad value in record " + std::to_string(j));
            }
        }
        features.ids.push_back(std::move(id));
    }
    return features;
}

}  // namespace somclass
