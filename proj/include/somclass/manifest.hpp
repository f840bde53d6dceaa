#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace somclass {

struct ManifestEntry {
    std::string path;
    std::string class_name;
};

/// Ordered dataset description: one `path,class_name` record per image.
/// Class indices follow first appearance order in the file.
struct DatasetManifest {
    std::vector<ManifestEntry> entries;
    std::vector<std::string> class_names;
    std::vector<int> labels;  // per entry, index into class_names

    int class_index(const std::string& name) const;
};

/// Parses a manifest file. Blank lines and lines starting with '#' are
/// skipped. Throws BadManifest on duplicates, missing separators, or an
/// empty manifest; MissingFile when the manifest itself is absent.
DatasetManifest load_manifest(const std::filesystem::path& path);

void write_manifest(const DatasetManifest& manifest,
                    const std::filesystem::path& path);

}  // namespace somclass
