#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ssb/key.hpp"

namespace ssb {

/// Shortest-path hop count; nullopt means unreachable.
using Distance = std::optional<int>;

struct CollaborationEdge {
    Key a;
    Key b;
    double weight = 1.0;  // stored, ignored by all v1 metrics

    bool operator==(const CollaborationEdge&) const = default;
};

/// Undirected collaboration graph over business keys. Actors may exist here
/// without a registry record and vice versa; the two stores are linked only
/// by key equality.
///
/// All metrics are unweighted in v1. Same single-writer / multi-reader
/// contract as RegistryStore; metric calls are pure reads.
class SocialGraph {
public:
    /// Idempotent.
    void add_actor(const Key& id);

    /// Both endpoints must already be actors; the pair is unordered and
    /// unique. Re-adding overwrites the weight. Throws SelfLoop when a == b.
    void add_collaboration(const CollaborationEdge& edge);

    bool has_actor(const Key& id) const { return adjacency_.contains(id); }
    std::size_t actor_count() const { return adjacency_.size(); }
    std::size_t edge_count() const;

    std::vector<Key> actors() const;
    /// Edges with endpoints ordered a < b, sorted by (a, b).
    std::vector<CollaborationEdge> edges() const;
    /// Neighbors in key order.
    std::vector<Key> neighbors(const Key& id) const;

    /// Unweighted BFS shortest-path length.
    Distance hop_distance(const Key& src, const Key& dst) const;

    /// { x : hop_distance(src, x) <= k }, src included.
    std::set<Key> within_hops(const Key& src, int k) const;

    int degree(const Key& id) const;

    /// Wasserman-Faust component-normalized closeness:
    /// (r-1)/sum_d scaled by (r-1)/(n-1) over the r reachable actors.
    /// 0 for isolated actors and single-actor graphs.
    double closeness(const Key& id) const;

    /// Unnormalized betweenness under the undirected convention (pair sum
    /// halved). Brandes accumulation; the brute-force path-enumeration
    /// oracle in the test suite defines the expected values.
    double betweenness(const Key& id) const;

    /// Betweenness for every actor in one Brandes sweep.
    std::map<Key, double> betweenness_all() const;

private:
    const std::map<Key, double>& adjacency_of(const Key& id) const;

    // actor -> neighbor -> weight; symmetric by construction
    std::map<Key, std::map<Key, double>> adjacency_;
};

}  // namespace ssb
