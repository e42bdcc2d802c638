#include "lppie/error.hpp"

namespace lppie {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::EmptyBlock: return "EmptyBlock";
    case ErrorCode::CorruptValue: return "CorruptValue";
    case ErrorCode::MalformedDigits: return "MalformedDigits";
    case ErrorCode::InvalidChunkSize: return "InvalidChunkSize";
    case ErrorCode::ChunkOverflow: return "ChunkOverflow";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::AmbiguousInverse: return "AmbiguousInverse";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::IntegrityFailure: return "IntegrityFailure";
    case ErrorCode::IoFailure: return "IoFailure";
    }
    return "UnknownError";
}

} // namespace lppie
