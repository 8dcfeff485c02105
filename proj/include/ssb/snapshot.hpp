#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ssb/registry.hpp"
#include "ssb/social_graph.hpp"

namespace ssb {

/// The registry and the social graph, independently populated and linked
/// only by key equality.
struct Stores {
    RegistryStore registry;
    SocialGraph graph;
};

/// Per-kind record counts of one load, for operator-facing summaries.
struct SnapshotCounts {
    int business = 0;
    int service = 0;
    int binding = 0;
    int tmodel = 0;
    int actor = 0;
    int edge = 0;
};

/// Line-delimited snapshot: one JSON object per line with a "kind"
/// discriminator in {"business","service","binding","tmodel","actor","edge"}.
/// Loading is two-pass (entities/tModels/actors, then services, then
/// bindings/edges) so files need not be topologically ordered. Errors carry
/// the 1-based line number. Merges into `stores`; on error the caller's
/// stores may be partially updated and should be discarded.
SnapshotCounts apply_snapshot(Stores& stores, std::string_view text);

Stores parse_snapshot(std::string_view text);

/// Throws SnapshotCorrupt on unreadable files or bad content.
Stores load_snapshot(const std::filesystem::path& path);

/// Canonical dump: tModels, businesses, services, bindings, actors, edges,
/// each sorted by key. dump(load(dump(s))) == dump(s).
std::string dump_snapshot(const Stores& stores);

/// Atomic write: temp file in the same directory, then rename.
void save_snapshot(const Stores& stores, const std::filesystem::path& path);

}  // namespace ssb
