#include <doctest.h>

#include <fstream>
#include <sstream>

#include <httplib.h>

#include "helpers.hpp"
#include "ssb/error.hpp"
#include "ssb/json.hpp"
#include "ssb/server.hpp"

using namespace ssb;
using namespace ssb::testing;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("ssb-server-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

ServerConfig test_config(const std::filesystem::path& dir) {
    ServerConfig config;
    config.listen_address = "127.0.0.1:0";  // any free port
    config.snapshot_path = dir / "store.jsonl";
    return config;
}

// Replays the fixture file through the mutation endpoints, kind by kind.
void post_fixture(httplib::Client& client) {
    std::istringstream in(read_file(std::string(FIXTURE_DIR) + "/figure3.jsonl"));
    for (std::string line; std::getline(in, line);) {
        if (line.empty()) continue;
        json record = json::parse(line);
        std::string kind = record.at("kind");
        record.erase("kind");
        std::string path;
        if (kind == "tmodel") path = "/registry/tmodels";
        else if (kind == "business") path = "/registry/businesses";
        else if (kind == "service")
            path = "/registry/businesses/" + record.at("business_key").get<std::string>() +
                   "/services";
        else if (kind == "binding")
            path = "/registry/services/" + record.at("service_key").get<std::string>() +
                   "/bindings";
        else if (kind == "actor") path = "/graph/actors";
        else path = "/graph/edges";
        auto res = client.Post(path, record.dump(), "application/json");
        REQUIRE(res);
        REQUIRE(res->status == 201);
    }
}

}  // namespace

TEST_CASE("healthz answers on an empty snapshot") {
    auto dir = fresh_dir("health");
    BrokerServer server(test_config(dir));
    server.start_background();
    httplib::Client client("127.0.0.1", server.bound_port());
    auto res = client.Get("/healthz");
    REQUIRE(res);
    CHECK(res->status == 200);
    CHECK(res->body == "ok");
    server.stop();
}

TEST_CASE("worked example end to end over HTTP") {
    auto dir = fresh_dir("fig3");
    BrokerServer server(test_config(dir));
    server.start_background();
    httplib::Client client("127.0.0.1", server.bound_port());
    post_fixture(client);

    json request{{"consumer", fig3_org('A')},
                 {"service", json{{"categories", json::array({kPerformanceReport})}}},
                 {"social", "within_hops(consumer, 2)"}};
    auto res = client.Post("/broker/query", request.dump(), "application/json");
    REQUIRE(res);
    REQUIRE(res->status == 200);
    json body = json::parse(res->body);
    REQUIRE(body.at("providers").size() == 2);
    CHECK(body["providers"][0]["business"]["name"] == "Organization H");
    CHECK(body["providers"][0]["rank"] == 1);
    CHECK(body["providers"][1]["business"]["name"] == "Organization F");
    CHECK(body["providers"][1]["rank"] == 2);
    CHECK(body["excluded_count"] == 1);

    // search + white pages + metrics read endpoints
    auto search = client.Get("/registry/search?category=" + kReportsTModel.str() +
                             ":performance-report");
    REQUIRE(search);
    CHECK(search->status == 200);
    CHECK(json::parse(search->body).at("matches").size() == 3);

    auto white = client.Get("/registry/businesses/" + fig3_org('H').str());
    REQUIRE(white);
    CHECK(white->status == 200);
    CHECK(json::parse(white->body).at("name") == "Organization H");

    auto metrics = client.Get("/graph/metrics/" + fig3_org('G').str());
    REQUIRE(metrics);
    CHECK(metrics->status == 200);
    json m = json::parse(metrics->body);
    CHECK(m.at("degree") == 2);
    CHECK(m.at("betweenness").get<double>() > 0.0);

    server.stop();
}

TEST_CASE("errors map to status codes with ApiError bodies") {
    auto dir = fresh_dir("errors");
    BrokerServer server(test_config(dir));
    server.start_background();
    httplib::Client client("127.0.0.1", server.bound_port());

    auto missing = client.Get("/registry/businesses/" + key_of(123).str());
    REQUIRE(missing);
    CHECK(missing->status == 404);
    CHECK(json::parse(missing->body).at("code") == "unknown_business");

    json business{{"business_key", key_of(1)}, {"name", "Org"}, {"description", ""},
                  {"contacts", json::array()}, {"identifiers", json::array()},
                  {"categories", json::array()}};
    REQUIRE(client.Post("/registry/businesses", business.dump(), "application/json")->status ==
            201);
    auto dup = client.Post("/registry/businesses", business.dump(), "application/json");
    CHECK(dup->status == 409);
    CHECK(json::parse(dup->body).at("code") == "duplicate_key");

    business["name"] = "";
    business["business_key"] = key_of(2);
    auto invalid = client.Post("/registry/businesses", business.dump(), "application/json");
    CHECK(invalid->status == 400);
    CHECK(json::parse(invalid->body).at("code") == "validation_error");

    json query{{"consumer", key_of(1)}, {"social", "within_hops("}};
    auto bad_social = client.Post("/broker/query", query.dump(), "application/json");
    CHECK(bad_social->status == 400);
    json body = json::parse(bad_social->body);
    CHECK(body.at("code") == "syntax_error");
    CHECK(body.at("detail").at("position").get<int>() >= 0);

    // failed mutation left no trace in the snapshot
    server.stop();
    Stores stores = load_snapshot(dir / "store.jsonl");
    CHECK(stores.registry.businesses().size() == 1);
}

TEST_CASE("kill-and-restart preserves the stores") {
    auto dir = fresh_dir("restart");
    std::string before;
    {
        BrokerServer server(test_config(dir));
        server.start_background();
        httplib::Client client("127.0.0.1", server.bound_port());
        post_fixture(client);
        before = server.dump();
        server.stop();
    }
    {
        BrokerServer server(test_config(dir));
        CHECK(server.dump() == before);
    }
}

TEST_CASE("a corrupt snapshot refuses to start") {
    auto dir = fresh_dir("corrupt");
    std::ofstream(dir / "store.jsonl") << "{\"kind\":\"actor\",\"id\":\"trunc\n";
    CHECK_THROWS_AS(BrokerServer(test_config(dir)), Error);
}

TEST_CASE("config files parse with environment overrides") {
    auto dir = fresh_dir("config");
    std::ofstream(dir / "broker.conf") << "listen_address = 127.0.0.1:9099\n"
                                       << "# comment\n"
                                       << "snapshot_path = " << (dir / "s.jsonl").string()
                                       << "\n"
                                       << "snapshot_on_mutation = false\n";
    ServerConfig config = ServerConfig::load(dir / "broker.conf");
    CHECK(config.listen_address == "127.0.0.1:9099");
    CHECK(config.port() == 9099);
    CHECK(config.host() == "127.0.0.1");
    CHECK_FALSE(config.snapshot_on_mutation);

    setenv("BROKER_LISTEN_ADDRESS", "127.0.0.1:9100", 1);
    CHECK(ServerConfig::load(dir / "broker.conf").listen_address == "127.0.0.1:9100");
    unsetenv("BROKER_LISTEN_ADDRESS");

    std::ofstream(dir / "bad.conf") << "unknown_key = 1\n";
    CHECK_THROWS_AS(ServerConfig::load(dir / "bad.conf"), Error);

    ServerConfig bad;
    bad.listen_address = "no-port";
    CHECK_THROWS_AS(bad.port(), Error);
}
