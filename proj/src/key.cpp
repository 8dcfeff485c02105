#include "ssb/key.hpp"

#include <cctype>

#include "ssb/error.hpp"

namespace ssb {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateKey: return "duplicate_key";
        case ErrorCode::ValidationError: return "validation_error";
        case ErrorCode::UnknownBusiness: return "unknown_business";
        case ErrorCode::UnknownService: return "unknown_service";
        case ErrorCode::UnknownTModel: return "unknown_tmodel";
        case ErrorCode::UnknownActor: return "unknown_actor";
        case ErrorCode::UnknownConsumer: return "unknown_consumer";
        case ErrorCode::SelfLoop: return "self_loop";
        case ErrorCode::SyntaxError: return "syntax_error";
        case ErrorCode::RangeError: return "range_error";
        case ErrorCode::SnapshotCorrupt: return "snapshot_corrupt";
        case ErrorCode::BindError: return "bind_error";
    }
    return "internal_error";
}

namespace {

// Dash positions of the 8-4-4-4-12 layout.
constexpr std::size_t kUuidLen = 36;

bool is_dash_position(std::size_t i) {
    return i == 8 || i == 13 || i == 18 || i == 23;
}

}  // namespace

Key Key::parse(std::string_view text) {
    if (text.size() != kUuidLen) {
        throw Error(ErrorCode::ValidationError,
                    "key must be a 36-character UUID: \"" + std::string(text) + "\"");
    }
    std::string canonical(text);
    for (std::size_t i = 0; i < kUuidLen; ++i) {
        char c = canonical[i];
        if (is_dash_position(i)) {
            if (c != '-') {
                throw Error(ErrorCode::ValidationError,
                            "key must match the 8-4-4-4-12 UUID layout: \"" +
                                std::string(text) + "\"");
            }
        } else if (c >= 'A' && c <= 'F') {
            canonical[i] = static_cast<char>(c - 'A' + 'a');
        } else if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) {
            throw Error(ErrorCode::ValidationError,
                        "key contains a non-hex character: \"" + std::string(text) + "\"");
        }
    }
    return Key(std::move(canonical));
}

bool Key::valid(std::string_view text) {
    if (text.size() != kUuidLen) return false;
    for (std::size_t i = 0; i < kUuidLen; ++i) {
        char c = text[i];
        if (is_dash_position(i)) {
            if (c != '-') return false;
        } else if (!std::isxdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace ssb
