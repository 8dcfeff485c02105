#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ssb/key.hpp"

namespace ssb {

/// Anchor of a constraint or ranking metric: either a concrete actor key or
/// the reserved word "consumer", bound to the requesting actor at
/// evaluation time.
struct ActorRef {
    bool is_consumer = true;
    Key key;  // meaningful only when !is_consumer

    static ActorRef consumer() { return ActorRef{}; }
    static ActorRef actor(Key k) { return ActorRef{false, std::move(k)}; }

    Key bind(const Key& consumer_key) const { return is_consumer ? consumer_key : key; }
    bool operator==(const ActorRef&) const = default;
};

/// One predicate over graph metrics. CollaboratedWith(a) is semantically
/// WithinHops(a, 1); ConnectedTo(a) means finite hop distance to a.
struct SocialConstraint {
    enum class Kind { WithinHops, CollaboratedWith, MinDegree, ConnectedTo };

    Kind kind;
    ActorRef anchor;  // unused for MinDegree
    int bound = 0;    // k for WithinHops, n for MinDegree

    static SocialConstraint within_hops(ActorRef a, int k) {
        return {Kind::WithinHops, std::move(a), k};
    }
    static SocialConstraint collaborated_with(ActorRef a) {
        return {Kind::CollaboratedWith, std::move(a), 0};
    }
    static SocialConstraint min_degree(int n) { return {Kind::MinDegree, ActorRef{}, n}; }
    static SocialConstraint connected_to(ActorRef a) {
        return {Kind::ConnectedTo, std::move(a), 0};
    }

    bool operator==(const SocialConstraint&) const = default;
};

struct RankingCriterion {
    enum class Metric { HopsTo, Degree, Closeness, Betweenness };

    Metric metric;
    ActorRef anchor;  // HopsTo only
    bool ascending;   // defaulted per metric when omitted in text form

    static RankingCriterion hops_to(ActorRef a, bool asc = true) {
        return {Metric::HopsTo, std::move(a), asc};
    }
    static RankingCriterion degree(bool asc = false) { return {Metric::Degree, {}, asc}; }
    static RankingCriterion closeness(bool asc = false) { return {Metric::Closeness, {}, asc}; }
    static RankingCriterion betweenness(bool asc = false) {
        return {Metric::Betweenness, {}, asc};
    }

    bool operator==(const RankingCriterion&) const = default;
};

/// Constraints combine by conjunction; ranking is lexicographic and never
/// empty (a missing RANK BY clause defaults to hops(consumer) asc).
struct SocialRequirement {
    std::vector<SocialConstraint> constraints;
    std::vector<RankingCriterion> ranking;

    static SocialRequirement defaulted() {
        return {{}, {RankingCriterion::hops_to(ActorRef::consumer())}};
    }

    bool operator==(const SocialRequirement&) const = default;
};

/// Parses the requirement mini-language:
///
///   query      := constraint ("AND" constraint)* rank_clause?
///               | rank_clause?                              (empty constraints)
///   constraint := "within_hops(" actor "," int ")"
///               | "collaborated_with(" actor ")"
///               | "min_degree(" int ")"
///               | "connected_to(" actor ")"
///   rank_clause:= "RANK" "BY" rank ("," rank)*
///   rank       := ("hops(" actor ")" | "degree" | "closeness" | "betweenness")
///                 ("asc" | "desc")?
///   actor      := '"' uuid '"' | "consumer"
///
/// Keywords are case-insensitive; whitespace is free. Throws
/// Error(SyntaxError) with a byte position and expected-token message, or
/// Error(RangeError) for negative integers.
SocialRequirement parse_social_requirement(std::string_view text);

/// Canonical text form; parse(serialize(r)) == r for well-formed r.
std::string serialize_social_requirement(const SocialRequirement& req);

std::string serialize_constraint(const SocialConstraint& c);
std::string serialize_criterion(const RankingCriterion& c);

}  // namespace ssb
