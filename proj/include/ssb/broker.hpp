#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssb/registry.hpp"
#include "ssb/requirements.hpp"
#include "ssb/social_graph.hpp"

namespace ssb {

struct BrokerRequest {
    Key consumer;  // must exist in the social graph at evaluation time
    ServiceRequirements service;
    SocialRequirement social;
};

/// One value per ranking criterion, in criterion order. nullopt means the
/// metric could not be evaluated for this provider (unreachable anchor or
/// provider absent from the graph); such entries sort after every finite
/// value under both directions.
struct ScoreEntry {
    RankingCriterion criterion;
    std::optional<double> value;

    bool operator==(const ScoreEntry&) const = default;
};

struct MatchedService {
    BusinessService service;
    std::vector<std::string> access_points;  // from the service's bindings

    bool operator==(const MatchedService&) const = default;
};

struct RankedProvider {
    BusinessEntity provider;
    std::vector<MatchedService> services;  // non-empty
    std::vector<ScoreEntry> scores;
    int rank;  // competition ranking: equal score vectors share a rank

    bool operator==(const RankedProvider&) const = default;
};

struct BrokerResponse {
    std::vector<RankedProvider> providers;  // sorted by rank, ties by key
    int excluded_count = 0;  // matched the service requirement, failed social

    bool operator==(const BrokerResponse&) const = default;
};

/// Social check of the two-step filter. A provider absent from the graph
/// fails every anchored constraint and min_degree(n) for n > 0, and passes
/// min_degree(0); this is a false result, not an error. Only an unknown
/// consumer anchor raises UnknownActor.
bool evaluate_constraint(const SocialConstraint& constraint, const Key& provider,
                         const Key& consumer, const SocialGraph& graph);

/// Metric value backing one ranking criterion; nullopt when unreachable or
/// the provider is not in the graph.
std::optional<double> evaluate_metric(const RankingCriterion& criterion, const Key& provider,
                                      const Key& consumer, const SocialGraph& graph);

/// Orders two score vectors of equal criterion lists lexicographically.
/// Returns <0, 0, >0.
int compare_scores(const std::vector<ScoreEntry>& a, const std::vector<ScoreEntry>& b);

/// The brokerage pipeline: functional search against the registry, social
/// filter over the providers of the matching services, score and
/// lexicographic sort of the survivors, competition rank assignment.
/// Deterministic: the final tie-break is provider key ascending.
/// Throws UnknownConsumer when the consumer is not a graph actor.
BrokerResponse broker_query(const RegistryStore& registry, const SocialGraph& graph,
                            const BrokerRequest& request);

}  // namespace ssb
