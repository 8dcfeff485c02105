#pragma once

#include <nlohmann/json.hpp>

#include "ssb/broker.hpp"
#include "ssb/registry.hpp"
#include "ssb/requirements.hpp"
#include "ssb/social_graph.hpp"

namespace ssb {

using nlohmann::json;

// Keys encode as their canonical string form.
void to_json(json& j, const Key& k);
void from_json(const json& j, Key& k);

void to_json(json& j, const Contact& c);
void from_json(const json& j, Contact& c);
void to_json(json& j, const KeyedReference& r);
void from_json(const json& j, KeyedReference& r);
void to_json(json& j, const BusinessEntity& e);
void from_json(const json& j, BusinessEntity& e);
void to_json(json& j, const BusinessService& s);
void from_json(const json& j, BusinessService& s);
void to_json(json& j, const BindingTemplate& b);
void from_json(const json& j, BindingTemplate& b);
void to_json(json& j, const TModel& t);
void from_json(const json& j, TModel& t);
void to_json(json& j, const ServiceRequirements& r);
void from_json(const json& j, ServiceRequirements& r);
void to_json(json& j, const ServiceMatch& m);

// Structured requirement encoding for programmatic clients; the textual
// grammar stays the primary wire form.
void to_json(json& j, const SocialConstraint& c);
void from_json(const json& j, SocialConstraint& c);
void to_json(json& j, const RankingCriterion& c);
void from_json(const json& j, RankingCriterion& c);
void to_json(json& j, const SocialRequirement& r);
void from_json(const json& j, SocialRequirement& r);

// Broker response; scores carry the canonical criterion text, null value
// means unreachable.
void to_json(json& j, const ScoreEntry& s);
void to_json(json& j, const MatchedService& s);
void to_json(json& j, const RankedProvider& p);
void to_json(json& j, const BrokerResponse& r);

}  // namespace ssb
