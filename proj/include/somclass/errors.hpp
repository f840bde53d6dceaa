#pragma once

#include <stdexcept>
#include <string>

namespace somclass {

/// Failure categories surfaced by the library. The CLI maps them onto
/// process exit codes (see tools/somclass.cpp).
enum class Errc {
    // imageio
    missing_file,
    unsupported_format,
    malformed_image,
    // features
    empty_image,
    duplicate_id,
    empty_input,
    // linalg
    not_symmetric,
    no_convergence,
    // pca / lsa
    bad_dimension,
    too_few_images,
    dimension_mismatch,
    rank_too_low,
    // som
    index_out_of_range,
    invalid_config,
    model_not_trained,
    // eval
    length_mismatch,
    label_out_of_range,
    empty_matrix,
    // synth
    invalid_spec,
    // persistence / cli
    version_mismatch,
    corrupt_file,
    bad_manifest,
    bad_cache,
    io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace somclass
