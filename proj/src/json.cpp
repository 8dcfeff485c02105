#include "ssb/json.hpp"

#include "ssb/error.hpp"

namespace ssb {

namespace {

void put_optional(json& j, const char* field, const std::optional<std::string>& v) {
    if (v) j[field] = *v;
}

std::optional<std::string> get_optional(const json& j, const char* field) {
    auto it = j.find(field);
    if (it == j.end() || it->is_null()) return std::nullopt;
    return it->get<std::string>();
}

}  // namespace

void to_json(json& j, const Key& k) { j = k.str(); }

void from_json(const json& j, Key& k) { k = Key::parse(j.get<std::string>()); }

void to_json(json& j, const Contact& c) {
    j = json{{"name", c.name}};
    put_optional(j, "phone", c.phone);
    put_optional(j, "email", c.email);
    put_optional(j, "address", c.address);
}

void from_json(const json& j, Contact& c) {
    j.at("name").get_to(c.name);
    c.phone = get_optional(j, "phone");
    c.email = get_optional(j, "email");
    c.address = get_optional(j, "address");
}

void to_json(json& j, const KeyedReference& r) {
    j = json{{"tmodel_key", r.tmodel_key}, {"key_name", r.key_name}, {"key_value", r.key_value}};
}

void from_json(const json& j, KeyedReference& r) {
    j.at("tmodel_key").get_to(r.tmodel_key);
    r.key_name = j.value("key_name", "");
    j.at("key_value").get_to(r.key_value);
}

void to_json(json& j, const BusinessEntity& e) {
    j = json{{"business_key", e.business_key}, {"name", e.name},
             {"description", e.description},  {"contacts", e.contacts},
             {"identifiers", e.identifiers},  {"categories", e.categories}};
}

void from_json(const json& j, BusinessEntity& e) {
    j.at("business_key").get_to(e.business_key);
    j.at("name").get_to(e.name);
    e.description = j.value("description", "");
    e.contacts = j.value("contacts", std::vector<Contact>{});
    e.identifiers = j.value("identifiers", std::vector<KeyedReference>{});
    e.categories = j.value("categories", std::vector<KeyedReference>{});
}

void to_json(json& j, const BusinessService& s) {
    j = json{{"service_key", s.service_key}, {"business_key", s.business_key},
             {"name", s.name},               {"description", s.description},
             {"categories", s.categories}};
}

void from_json(const json& j, BusinessService& s) {
    j.at("service_key").get_to(s.service_key);
    j.at("business_key").get_to(s.business_key);
    s.name = j.value("name", "");
    s.description = j.value("description", "");
    s.categories = j.value("categories", std::vector<KeyedReference>{});
}

void to_json(json& j, const BindingTemplate& b) {
    j = json{{"binding_key", b.binding_key}, {"service_key", b.service_key},
             {"access_point", b.access_point}, {"tmodel_keys", b.tmodel_keys}};
}

void from_json(const json& j, BindingTemplate& b) {
    j.at("binding_key").get_to(b.binding_key);
    j.at("service_key").get_to(b.service_key);
    b.access_point = j.value("access_point", "");
    b.tmodel_keys = j.value("tmodel_keys", std::vector<Key>{});
}

void to_json(json& j, const TModel& t) {
    j = json{{"tmodel_key", t.tmodel_key}, {"name", t.name}, {"description", t.description}};
    put_optional(j, "overview_url", t.overview_url);
}

void from_json(const json& j, TModel& t) {
    j.at("tmodel_key").get_to(t.tmodel_key);
    j.at("name").get_to(t.name);
    t.description = j.value("description", "");
    t.overview_url = get_optional(j, "overview_url");
}

void to_json(json& j, const ServiceRequirements& r) {
    j = json{{"categories", r.categories},
             {"keywords", r.keywords},
             {"required_tmodels", r.required_tmodels}};
}

void from_json(const json& j, ServiceRequirements& r) {
    r.categories = j.value("categories", std::vector<KeyedReference>{});
    r.keywords = j.value("keywords", std::vector<std::string>{});
    r.required_tmodels = j.value("required_tmodels", std::vector<Key>{});
}

void to_json(json& j, const ServiceMatch& m) {
    j = json{{"service", m.service}, {"provider_key", m.provider_key}};
}

namespace {

json actor_ref_to_json(const ActorRef& a) {
    if (a.is_consumer) return "consumer";
    return a.key.str();
}

ActorRef actor_ref_from_json(const json& j) {
    std::string s = j.get<std::string>();
    if (s == "consumer") return ActorRef::consumer();
    return ActorRef::actor(Key::parse(s));
}

}  // namespace

void to_json(json& j, const SocialConstraint& c) {
    switch (c.kind) {
        case SocialConstraint::Kind::WithinHops:
            j = json{{"type", "within_hops"}, {"anchor", actor_ref_to_json(c.anchor)},
                     {"k", c.bound}};
            break;
        case SocialConstraint::Kind::CollaboratedWith:
            j = json{{"type", "collaborated_with"}, {"anchor", actor_ref_to_json(c.anchor)}};
            break;
        case SocialConstraint::Kind::MinDegree:
            j = json{{"type", "min_degree"}, {"n", c.bound}};
            break;
        case SocialConstraint::Kind::ConnectedTo:
            j = json{{"type", "connected_to"}, {"anchor", actor_ref_to_json(c.anchor)}};
            break;
    }
}

void from_json(const json& j, SocialConstraint& c) {
    std::string type = j.at("type").get<std::string>();
    if (type == "within_hops") {
        int k = j.at("k").get<int>();
        if (k < 0) throw Error(ErrorCode::RangeError, "within_hops k must be non-negative");
        c = SocialConstraint::within_hops(actor_ref_from_json(j.at("anchor")), k);
    } else if (type == "collaborated_with") {
        c = SocialConstraint::collaborated_with(actor_ref_from_json(j.at("anchor")));
    } else if (type == "min_degree") {
        int n = j.at("n").get<int>();
        if (n < 0) throw Error(ErrorCode::RangeError, "min_degree n must be non-negative");
        c = SocialConstraint::min_degree(n);
    } else if (type == "connected_to") {
        c = SocialConstraint::connected_to(actor_ref_from_json(j.at("anchor")));
    } else {
        throw Error(ErrorCode::ValidationError, "unknown constraint type: " + type);
    }
}

void to_json(json& j, const RankingCriterion& c) {
    j = json{{"direction", c.ascending ? "asc" : "desc"}};
    switch (c.metric) {
        case RankingCriterion::Metric::HopsTo:
            j["metric"] = "hops";
            j["anchor"] = actor_ref_to_json(c.anchor);
            break;
        case RankingCriterion::Metric::Degree: j["metric"] = "degree"; break;
        case RankingCriterion::Metric::Closeness: j["metric"] = "closeness"; break;
        case RankingCriterion::Metric::Betweenness: j["metric"] = "betweenness"; break;
    }
}

void from_json(const json& j, RankingCriterion& c) {
    std::string metric = j.at("metric").get<std::string>();
    std::string direction = j.value("direction", "");
    if (metric == "hops") {
        c = RankingCriterion::hops_to(actor_ref_from_json(j.at("anchor")));
    } else if (metric == "degree") {
        c = RankingCriterion::degree();
    } else if (metric == "closeness") {
        c = RankingCriterion::closeness();
    } else if (metric == "betweenness") {
        c = RankingCriterion::betweenness();
    } else {
        throw Error(ErrorCode::ValidationError, "unknown ranking metric: " + metric);
    }
    if (direction == "asc") {
        c.ascending = true;
    } else if (direction == "desc") {
        c.ascending = false;
    } else if (!direction.empty()) {
        throw Error(ErrorCode::ValidationError, "direction must be asc or desc");
    }
}

void to_json(json& j, const SocialRequirement& r) {
    j = json{{"constraints", r.constraints}, {"ranking", r.ranking}};
}

void from_json(const json& j, SocialRequirement& r) {
    r.constraints = j.value("constraints", std::vector<SocialConstraint>{});
    r.ranking = j.value("ranking", std::vector<RankingCriterion>{});
    if (r.ranking.empty()) r.ranking = SocialRequirement::defaulted().ranking;
}

void to_json(json& j, const ScoreEntry& s) {
    j = json{{"criterion", serialize_criterion(s.criterion)}};
    if (s.value) {
        j["value"] = *s.value;
    } else {
        j["value"] = nullptr;
    }
}

void to_json(json& j, const MatchedService& s) {
    to_json(j, s.service);
    j["access_points"] = s.access_points;
}

void to_json(json& j, const RankedProvider& p) {
    j = json{{"rank", p.rank},
             {"business", p.provider},
             {"services", p.services},
             {"scores", p.scores}};
}

void to_json(json& j, const BrokerResponse& r) {
    j = json{{"providers", r.providers}, {"excluded_count", r.excluded_count}};
}

}  // namespace ssb
