#include "somclass/manifest.hpp"

#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "somclass/errors.hpp"

namespace somclass {

int DatasetManifest::class_index(const std::string& name) const {
    for (std::size_t i = 0; i < class_names.size(); ++i) {
        if (class_names[i] == name) return static_cast<int>(i);
    }
    return -1;
}

DatasetManifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(Errc::missing_file, "cannot open manifest " + path.string());
    }

    DatasetManifest manifest;
    std::unordered_set<std::string> seen_paths;
    std::unordered_map<std::string, int> class_index;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto comma = line.rfind(',');
        if (comma == std::string::npos || comma == 0 || comma + 1 == line.size()) {
            throw Error(Errc::bad_manifest,
                        path.string() + ":" + std::to_string(line_no) +
                            ": expected 'path,class_name'");
        }
        ManifestEntry entry{line.substr(0, comma), line.substr(comma + 1)};
        if (!seen_paths.insert(entry.path).second) {
            throw Error(Errc::bad_manifest,
                        path.string() + ":" + std::to_string(line_no) +
                            ": duplicate path '" + entry.path + "'");
        }
        auto [it, inserted] = class_index.try_emplace(
            entry.class_name, static_cast<int>(manifest.class_names.size()));
        if (inserted) manifest.class_names.push_back(entry.class_name);
        manifest.labels.push_back(it->second);
        manifest.entries.push_back(std::move(entry));
    }
    if (manifest.entries.empty()) {
        throw Error(Errc::bad_manifest, path.string() + ": no entries");
    }
    return manifest;
}

void write_manifest(const DatasetManifest& manifest,
                    const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(Errc::io_error, "cannot write manifest " + path.string());
    }
    for (const auto& entry : manifest.entries) {
        out << entry.path << "," << entry.class_name << "\n";
    }
    if (!out) {
        throw Error(Errc::io_error, "write failed for " + path.string());
    }
}

}  // namespace somclass
