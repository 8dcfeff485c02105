#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace ssb {

/// Canonical lowercase UUID text form (8-4-4-4-12 hex). Business keys,
/// service keys, binding keys, tModel keys and graph actor ids all share
/// this key space. Comparison is byte-wise on the canonical form.
class Key {
public:
    Key() = default;

    /// Validates the UUID pattern and folds hex digits to lowercase.
    /// Throws Error(ValidationError) on anything else.
    static Key parse(std::string_view text);

    /// True iff `text` would be accepted by parse().
    static bool valid(std::string_view text);

    const std::string& str() const { return value_; }
    bool empty() const { return value_.empty(); }

    auto operator<=>(const Key&) const = default;

private:
    explicit Key(std::string canonical) : value_(std::move(canonical)) {}
    std::string value_;
};

}  // namespace ssb
