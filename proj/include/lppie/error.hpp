#pragma once

#include <stdexcept>
#include <string>

namespace lppie {

enum class ErrorCode {
    EmptyBlock,
    CorruptValue,
    MalformedDigits,
    InvalidChunkSize,
    ChunkOverflow,
    PrecisionExhausted,
    AmbiguousInverse,
    UnsupportedFormat,
    IntegrityFailure,
    IoFailure,
};

const char* error_code_name(ErrorCode code);

/// Every failure in the codec surfaces as a CodecError carrying a typed code;
/// callers map codes to process exit codes or retry policies.
class CodecError : public std::runtime_error {
public:
    CodecError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code),
          detail_(message) {}

    ErrorCode code() const noexcept { return code_; }

    /// The message without the code-name prefix, for rewrapping with context.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw CodecError(code, message);
}

} // namespace lppie
