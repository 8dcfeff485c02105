#include "ssb/broker.hpp"

#include <algorithm>
#include <map>

#include "ssb/error.hpp"

namespace ssb {

bool evaluate_constraint(const SocialConstraint& constraint, const Key& provider,
                         const Key& consumer, const SocialGraph& graph) {
    const bool provider_known = graph.has_actor(provider);

    auto anchor_key = [&]() -> Key {
        Key k = constraint.anchor.bind(consumer);
        if (!graph.has_actor(k)) {
            throw Error(ErrorCode::UnknownActor, "unknown anchor actor " + k.str());
        }
        return k;
    };

    switch (constraint.kind) {
        case SocialConstraint::Kind::WithinHops: {
            Key anchor = anchor_key();
            if (!provider_known) return false;
            Distance d = graph.hop_distance(anchor, provider);
            return d.has_value() && *d <= constraint.bound;
        }
        case SocialConstraint::Kind::CollaboratedWith: {
            Key anchor = anchor_key();
            if (!provider_known) return false;
            Distance d = graph.hop_distance(anchor, provider);
            return d.has_value() && *d <= 1;
        }
        case SocialConstraint::Kind::MinDegree: {
            if (!provider_known) return constraint.bound == 0;
            return graph.degree(provider) >= constraint.bound;
        }
        case SocialConstraint::Kind::ConnectedTo: {
            Key anchor = anchor_key();
            if (!provider_known) return false;
            return graph.hop_distance(anchor, provider).has_value();
        }
    }
    return false;
}

std::optional<double> evaluate_metric(const RankingCriterion& criterion, const Key& provider,
                                      const Key& consumer, const SocialGraph& graph) {
    if (!graph.has_actor(provider)) return std::nullopt;
    switch (criterion.metric) {
        case RankingCriterion::Metric::HopsTo: {
            Key anchor = criterion.anchor.bind(consumer);
            if (!graph.has_actor(anchor)) return std::nullopt;
            Distance d = graph.hop_distance(anchor, provider);
            if (!d) return std::nullopt;
            return static_cast<double>(*d);
        }
        case RankingCriterion::Metric::Degree:
            return static_cast<double>(graph.degree(provider));
        case RankingCriterion::Metric::Closeness:
            return graph.closeness(provider);
        case RankingCriterion::Metric::Betweenness:
            return graph.betweenness(provider);
    }
    return std::nullopt;
}

int compare_scores(const std::vector<ScoreEntry>& a, const std::vector<ScoreEntry>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        const auto& va = a[i].value;
        const auto& vb = b[i].value;
        if (!va && !vb) continue;
        if (!va) return 1;  // missing sorts last under both directions
        if (!vb) return -1;
        if (*va == *vb) continue;
        bool a_first = a[i].criterion.ascending ? (*va < *vb) : (*va > *vb);
        return a_first ? -1 : 1;
    }
    return 0;
}

BrokerResponse broker_query(const RegistryStore& registry, const SocialGraph& graph,
                            const BrokerRequest& request) {
    if (!graph.has_actor(request.consumer)) {
        throw Error(ErrorCode::UnknownConsumer,
                    "consumer is not a graph actor: " + request.consumer.str());
    }

    // step 2: functional search
    std::vector<ServiceMatch> matches = registry.find_services(request.service);

    // step 3: group by provider, fetch white pages
    std::map<Key, std::vector<MatchedService>> by_provider;
    for (const ServiceMatch& m : matches) {
        std::vector<std::string> access_points;
        for (const BindingTemplate& b : registry.bindings_of(m.service.service_key)) {
            access_points.push_back(b.access_point);
        }
        by_provider[m.provider_key].push_back(
            MatchedService{m.service, std::move(access_points)});
    }

    // steps 4-5: social filter + scoring
    BrokerResponse response;
    std::vector<RankedProvider> survivors;
    for (const auto& [provider_key, services] : by_provider) {
        bool passes = std::all_of(
            request.social.constraints.begin(), request.social.constraints.end(),
            [&](const SocialConstraint& c) {
                return evaluate_constraint(c, provider_key, request.consumer, graph);
            });
        if (!passes) {
            ++response.excluded_count;
            continue;
        }
        std::vector<ScoreEntry> scores;
        scores.reserve(request.social.ranking.size());
        for (const RankingCriterion& crit : request.social.ranking) {
            scores.push_back(
                ScoreEntry{crit, evaluate_metric(crit, provider_key, request.consumer, graph)});
        }
        survivors.push_back(RankedProvider{registry.get_business_detail(provider_key),
                                           services, std::move(scores), 0});
    }

    // step 6: lexicographic sort, provider key tie-break, competition ranks
    std::sort(survivors.begin(), survivors.end(),
              [](const RankedProvider& a, const RankedProvider& b) {
                  int c = compare_scores(a.scores, b.scores);
                  if (c != 0) return c < 0;
                  return a.provider.business_key < b.provider.business_key;
              });
    for (std::size_t i = 0; i < survivors.size(); ++i) {
        if (i > 0 && compare_scores(survivors[i].scores, survivors[i - 1].scores) == 0) {
            survivors[i].rank = survivors[i - 1].rank;
        } else {
            survivors[i].rank = static_cast<int>(i) + 1;
        }
    }
    response.providers = std::move(survivors);
    return response;
}

}  // namespace ssb
