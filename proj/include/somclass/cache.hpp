#pragma once

#include <filesystem>

#include "somclass/histogram.hpp"

namespace somclass {

/// Plain-text feature cache. First line is `count,dim`; each following
/// line is `image_id,v0,...,v<dim-1>` with reals rendered as shortest
/// round-trip decimals, so rewriting an unchanged matrix is byte-stable.
void write_cache(const FeatureMatrix& features, const std::filesystem::path& path);

/// Throws MissingFile / BadCache.
FeatureMatrix read_cache(const std::filesystem::path& path);

}  // namespace somclass
