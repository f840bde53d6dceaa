#pragma once

#include <filesystem>
#include <variant>

#include "somclass/lsa.hpp"
#include "somclass/pca.hpp"
#include "somclass/som.hpp"

namespace somclass {

inline constexpr int kModelFormatVersion = 1;

using SelectionModel = std::variant<PcaModel, LsaModel>;

/// Models persist as JSON documents: {format_version, model_kind, dims,
/// payload, checksum}. Reals serialize as shortest round-trip decimals, so
/// load(save(m)) is bit-exact; the checksum is FNV-1a 64 over the
/// serialized payload object.
void save_model(const PcaModel& model, const std::filesystem::path& path);
void save_model(const LsaModel& model, const std::filesystem::path& path);
void save_model(const SomModel& model, const std::filesystem::path& path);

/// Throw MissingFile / CorruptFile / VersionMismatch, and CorruptFile when
/// the stored kind is not the requested one.
PcaModel load_pca_model(const std::filesystem::path& path);
LsaModel load_lsa_model(const std::filesystem::path& path);
SomModel load_som_model(const std::filesystem::path& path);

/// Loads whichever selection model (pca or lsa) the file holds.
SelectionModel load_selection_model(const std::filesystem::path& path);

/// Applies either selection model to raw features.
FeatureMatrix project(const SelectionModel& model, const FeatureMatrix& x);

}  // namespace somclass
