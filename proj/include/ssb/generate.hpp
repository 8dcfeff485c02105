#pragma once

#include <cstdint>

#include "ssb/registry.hpp"
#include "ssb/snapshot.hpp"

namespace ssb {

/// Deterministic synthetic fixture: n_actors businesses that are also graph
/// actors, n_edges distinct random collaborations, n_providers of them
/// publishing one service in a fixed test category. Identical specs produce
/// byte-identical snapshots.
struct GenSpec {
    int n_actors;
    std::int64_t n_edges;  // <= n_actors*(n_actors-1)/2
    int n_providers;       // <= n_actors
    std::uint64_t seed;
};

/// The taxonomy tModel and category every generated provider publishes
/// under.
extern const char* const kGeneratedCategoryTModel;
extern const char* const kGeneratedCategoryValue;

/// Throws ValidationError on out-of-bounds spec fields.
Stores generate_stores(const GenSpec& spec);

}  // namespace ssb
