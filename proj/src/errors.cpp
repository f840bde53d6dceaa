#include "somclass/errors.hpp"

namespace somclass {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::missing_file: return "MissingFile";
        case Errc::unsupported_format: return "UnsupportedFormat";
        case Errc::malformed_image: return "MalformedImage";
        case Errc::empty_image: return "EmptyImage";
        case Errc::duplicate_id: return "DuplicateId";
        case Errc::empty_input: return "EmptyInput";
        case Errc::not_symmetric: return "NotSymmetric";
        case Errc::no_convergence: return "NoConvergence";
        case Errc::bad_dimension: return "BadDimension";
        case Errc::too_few_images: return "TooFewImages";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::rank_too_low: return "RankTooLow";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::invalid_config: return "InvalidConfig";
        case Errc::model_not_trained: return "ModelNotTrained";
        case Errc::length_mismatch: return "LengthMismatch";
        case Errc::label_out_of_range: return "LabelOutOfRange";
        case Errc::empty_matrix: return "EmptyMatrix";
        case Errc::invalid_spec: return "InvalidSpec";
        case Errc::version_mismatch: return "VersionMismatch";
        case Errc::corrupt_file: return "CorruptFile";
        case Errc::bad_manifest: return "BadManifest";
        case Errc::bad_cache: return "BadCache";
        case Errc::io_error: return "IoError";
    }
    return "UnknownError";
}

}  // namespace somclass
