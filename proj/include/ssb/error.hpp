#pragma once

#include <stdexcept>
#include <string>

namespace ssb {

enum class ErrorCode {
    DuplicateKey,
    ValidationError,
    UnknownBusiness,
    UnknownService,
    UnknownTModel,
    UnknownActor,
    UnknownConsumer,
    SelfLoop,
    SyntaxError,
    RangeError,
    SnapshotCorrupt,
    BindError,
};

/// Machine-readable code string used in API error bodies.
const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Error(ErrorCode code, std::string message, int position)
        : std::runtime_error(std::move(message)), code_(code), position_(position) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

    /// Byte offset into the offending input, or -1 when not positional.
    /// Set for SyntaxError/RangeError (parser) and SnapshotCorrupt (line number).
    int position() const { return position_; }

private:
    ErrorCode code_;
    int position_ = -1;
};

}  // namespace ssb
