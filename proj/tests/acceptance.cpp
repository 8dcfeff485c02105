// Acceptance suite: runs each shipped criterion, prints one pass/fail line
// per criterion, exits non-zero if any fails. Time budgets are asserted.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <httplib.h>

#include "broker_oracle.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "ssb/broker.hpp"
#include "ssb/error.hpp"
#include "ssb/json.hpp"
#include "ssb/server.hpp"

using namespace ssb;
using namespace ssb::testing;

namespace {

int g_failures = 0;

struct Criterion {
    const char* name;
    double budget_seconds;

    template <typename Fn>
    void run(Fn fn) const {
        auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            fn();
        } catch (const std::exception& e) {
            failure = e.what();
        }
        double elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        if (failure.empty() && elapsed > budget_seconds) {
            failure = "exceeded time budget of " + std::to_string(budget_seconds) + " s";
        }
        if (failure.empty()) {
            std::printf("PASS  %-38s (%.2f s)\n", name, elapsed);
        } else {
            std::printf("FAIL  %-38s (%.2f s): %s\n", name, elapsed, failure.c_str());
            ++g_failures;
        }
    }
};

void require(bool condition, const std::string& message) {
    if (!condition) throw std::runtime_error(message);
}

AdjMatrix matrix_of(const SocialGraph& g, int n) {
    AdjMatrix adj(n, std::vector<bool>(n, false));
    for (const CollaborationEdge& e : g.edges()) {
        int a = std::stoi(e.a.str().substr(e.a.str().size() - 4), nullptr, 16);
        int b = std::stoi(e.b.str().substr(e.b.str().size() - 4), nullptr, 16);
        adj[a][b] = adj[b][a] = true;
    }
    return adj;
}

BrokerRequest fig3_request() {
    BrokerRequest request;
    request.consumer = fig3_org('A');
    request.service.categories.push_back(kPerformanceReport);
    request.social = parse_social_requirement("within_hops(consumer, 2)");
    return request;
}

void check_example_response(const BrokerResponse& response) {
    require(response.providers.size() == 2, "expected exactly two ranked providers");
    require(response.providers[0].provider.business_key == fig3_org('H'),
            "rank 1 must be organization H");
    require(response.providers[0].rank == 1 &&
                response.providers[0].scores[0].value == 1.0,
            "H must hold rank 1 at hop distance 1");
    require(response.providers[1].provider.business_key == fig3_org('F'),
            "rank 2 must be organization F");
    require(response.providers[1].rank == 2 &&
                response.providers[1].scores[0].value == 2.0,
            "F must hold rank 2 at hop distance 2");
    require(response.excluded_count == 1, "J must be excluded, excluded_count=1");
}

void criterion_worked_example() {
    Stores stores = load_fig3();
    check_example_response(broker_query(stores.registry, stores.graph, fig3_request()));
}

void criterion_empty_results() {
    Stores stores = load_fig3();

    BrokerRequest request = fig3_request();
    request.service.categories = {KeyedReference{kReportsTModel, "", "no-such-category"}};
    BrokerResponse nothing = broker_query(stores.registry, stores.graph, request);
    require(nothing.providers.empty() && nothing.excluded_count == 0,
            "unknown category must yield an empty, successful response");

    request = fig3_request();
    request.social = parse_social_requirement("min_degree(999)");
    BrokerResponse strict = broker_query(stores.registry, stores.graph, request);
    require(strict.providers.empty(), "min_degree(999) must yield an empty provider list");
    require(strict.excluded_count == 3, "all three functional matches are excluded");
}

void criterion_metric_oracles() {
    std::mt19937_64 rng(50505);
    for (int round = 0; round < 50; ++round) {
        int n = 2 + static_cast<int>(rng() % 19);
        SocialGraph g = random_graph(n, 0.25, rng);
        AdjMatrix adj = matrix_of(g, n);
        auto dist = floyd_warshall(adj);

        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Distance d = g.hop_distance(key_of(i), key_of(j));
                bool ok = dist[i][j] >= kInf ? !d.has_value()
                                             : (d.has_value() && *d == dist[i][j]);
                require(ok, "hop_distance disagrees with Floyd-Warshall");
            }
        }

        long long degree_sum = 0;
        for (int i = 0; i < n; ++i) degree_sum += g.degree(key_of(i));
        require(degree_sum == 2 * static_cast<long long>(g.edge_count()),
                "handshake lemma violated");

        if (n <= 12) {
            auto expected = brute_betweenness(adj);
            auto actual = g.betweenness_all();
            for (int i = 0; i < n; ++i) {
                require(std::abs(actual.at(key_of(i)) - expected[i]) < 1e-9,
                        "betweenness disagrees with path enumeration beyond 1e-9");
            }
        }
    }
}

void run_broker_oracle(bool check_monotonicity) {
    std::mt19937_64 rng(60606);
    for (int round = 0; round < 100; ++round) {
        Triple t = random_triple(rng);
        OracleResult expected = brute_broker(t);
        BrokerResponse actual = broker_query(t.stores.registry, t.stores.graph, t.request);

        require(actual.excluded_count == expected.excluded, "excluded_count mismatch");
        require(actual.providers.size() == expected.rows.size(), "provider set mismatch");
        for (std::size_t i = 0; i < expected.rows.size(); ++i) {
            require(actual.providers[i].provider.business_key == expected.rows[i].provider,
                    "provider order mismatch");
            require(actual.providers[i].rank == expected.rows[i].rank, "rank mismatch");
        }

        if (check_monotonicity && t.request.social.ranking.size() == 1 &&
            t.request.social.ranking[0] ==
                RankingCriterion::hops_to(ActorRef::consumer(), true)) {
            for (std::size_t i = 1; i < actual.providers.size(); ++i) {
                const auto& prev = actual.providers[i - 1].scores[0].value;
                const auto& cur = actual.providers[i].scores[0].value;
                if (cur) {
                    require(prev.has_value() && *prev <= *cur,
                            "hop distances must not decrease down the ranking");
                }
            }
        }
    }
}

void criterion_determinism() {
    // criterion 1 under permuted record order
    std::string text = read_file(std::string(FIXTURE_DIR) + "/figure3.jsonl");
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) lines.push_back(line);
    }
    Stores baseline = parse_snapshot(text);
    std::string expected =
        json(broker_query(baseline.registry, baseline.graph, fig3_request())).dump();
    std::mt19937_64 rng(70707);
    for (int round = 0; round < 10; ++round) {
        std::shuffle(lines.begin(), lines.end(), rng);
        std::string permuted;
        for (const std::string& line : lines) permuted += line + "\n";
        Stores stores = parse_snapshot(permuted);
        require(json(broker_query(stores.registry, stores.graph, fig3_request())).dump() ==
                    expected,
                "permuted fixture changed the worked-example response bytes");
    }

    // criterion-4 style triples rebuilt from permuted snapshot lines
    std::mt19937_64 triple_rng(60606);
    for (int round = 0; round < 20; ++round) {
        Triple t = random_triple(triple_rng);
        std::string reference =
            json(broker_query(t.stores.registry, t.stores.graph, t.request)).dump();
        std::vector<std::string> dump_lines;
        std::istringstream dump_in(dump_snapshot(t.stores));
        for (std::string line; std::getline(dump_in, line);) dump_lines.push_back(line);
        std::shuffle(dump_lines.begin(), dump_lines.end(), rng);
        std::string permuted;
        for (const std::string& line : dump_lines) permuted += line + "\n";
        Stores rebuilt = parse_snapshot(permuted);
        require(json(broker_query(rebuilt.registry, rebuilt.graph, t.request)).dump() ==
                    reference,
                "permuted random store changed the response bytes");
    }
}

void criterion_parser_round_trip() {
    std::mt19937_64 rng(80808);
    auto random_actor = [&] {
        return rng() % 2 ? ActorRef::consumer()
                         : ActorRef::actor(key_of(static_cast<int>(rng() % 50)));
    };
    for (int i = 0; i < 500; ++i) {
        SocialRequirement req;
        int n_constraints = static_cast<int>(rng() % 4);
        for (int c = 0; c < n_constraints; ++c) {
            switch (rng() % 4) {
                case 0:
                    req.constraints.push_back(SocialConstraint::within_hops(
                        random_actor(), static_cast<int>(rng() % 10)));
                    break;
                case 1:
                    req.constraints.push_back(
                        SocialConstraint::collaborated_with(random_actor()));
                    break;
                case 2:
                    req.constraints.push_back(
                        SocialConstraint::min_degree(static_cast<int>(rng() % 10)));
                    break;
                default:
                    req.constraints.push_back(SocialConstraint::connected_to(random_actor()));
            }
        }
        int n_ranks = 1 + static_cast<int>(rng() % 3);
        for (int r = 0; r < n_ranks; ++r) {
            bool asc = rng() % 2;
            switch (rng() % 4) {
                case 0: req.ranking.push_back(RankingCriterion::hops_to(random_actor(), asc)); break;
                case 1: req.ranking.push_back(RankingCriterion::degree(asc)); break;
                case 2: req.ranking.push_back(RankingCriterion::closeness(asc)); break;
                default: req.ranking.push_back(RankingCriterion::betweenness(asc));
            }
        }
        require(parse_social_requirement(serialize_social_requirement(req)) == req,
                "parse(serialize(r)) != r");
    }

    const char* probes[] = {
        "within_hops(", "within_hops(consumer 2)", "within_hops(consumer, 2",
        "min_degree(x)", "min_degree(2) garbage", "RANK BY", "RANK BY sideways",
        "RANK BY degree,,", "connected_to(\"not-a-key\")", "\"unterminated", "AND",
        "@#$%", "collaborated_with()", "(",
    };
    for (const char* probe : probes) {
        try {
            parse_social_requirement(probe);
            throw std::runtime_error(std::string("no SyntaxError for: ") + probe);
        } catch (const Error& e) {
            require(e.code() == ErrorCode::SyntaxError && e.position() >= 0,
                    std::string("wrong error for probe: ") + probe);
        }
    }
}

void criterion_persistence_round_trip() {
    auto dir = std::filesystem::temp_directory_path() / "ssb-acceptance-persist";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    ServerConfig config;
    config.listen_address = "127.0.0.1:0";
    config.snapshot_path = dir / "store.jsonl";

    std::string before;
    {
        BrokerServer server(config);
        server.start_background();
        httplib::Client client("127.0.0.1", server.bound_port());

        std::mt19937_64 rng(90909);
        auto post = [&](const std::string& path, const json& body) {
            auto res = client.Post(path, body.dump(), "application/json");
            require(res && res->status == 201,
                    "mutation failed: " + path + (res ? " status " +
                    std::to_string(res->status) : " no response"));
        };
        for (int i = 0; i < 200; ++i) {
            switch (rng() % 4) {
                case 0: {
                    json body{{"business_key", key_of(i)},
                              {"name", "Org " + std::to_string(i)},
                              {"description", ""},
                              {"contacts", json::array()},
                              {"identifiers", json::array()},
                              {"categories", json::array()}};
                    post("/registry/businesses", body);
                    break;
                }
                case 1:
                    post("/registry/tmodels",
                         json{{"tmodel_key", key_of(i, '7')},
                              {"name", "spec " + std::to_string(i)},
                              {"description", ""}});
                    break;
                case 2:
                    post("/graph/actors", json{{"id", key_of(i, 'a')}});
                    break;
                default:
                    {
                        int a = 200 + static_cast<int>(rng() % 7);
                        int b = 200 + (a - 200 + 1 + static_cast<int>(rng() % 5)) % 13;
                        post("/graph/actors", json{{"id", key_of(a, 'a')}});
                        post("/graph/actors", json{{"id", key_of(b, 'a')}});
                        post("/graph/edges", json{{"a", key_of(a, 'a')},
                                                  {"b", key_of(b, 'a')},
                                                  {"weight", 1.0}});
                    }
                    break;
            }
        }
        before = server.dump();
        server.stop();
    }

    BrokerServer restarted(config);
    require(restarted.dump() == before, "dump after restart differs from dump before");
}

}  // namespace

int main() {
    Criterion{"1 worked-example reproduction", 1.0}.run(criterion_worked_example);
    Criterion{"2 empty-result paths", 1.0}.run(criterion_empty_results);
    Criterion{"3 graph-metric oracle equivalence", 30.0}.run(criterion_metric_oracles);
    Criterion{"4 broker oracle equivalence", 30.0}.run([] { run_broker_oracle(false); });
    Criterion{"5 ranking monotonicity", 30.0}.run([] { run_broker_oracle(true); });
    Criterion{"6 determinism & order independence", 30.0}.run(criterion_determinism);
    Criterion{"7 parser round-trip", 5.0}.run(criterion_parser_round_trip);
    Criterion{"8 persistence round-trip", 10.0}.run(criterion_persistence_round_trip);

    if (g_failures > 0) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
