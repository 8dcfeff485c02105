#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ssb/broker.hpp"
#include "ssb/error.hpp"
#include "ssb/generate.hpp"
#include "ssb/json.hpp"
#include "ssb/server.hpp"
#include "ssb/snapshot.hpp"

namespace {

// exit codes: 0 results found, 1 empty result, 2 error
constexpr int kExitEmpty = 1;
constexpr int kExitError = 2;

ssb::BrokerServer* g_server = nullptr;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ssb::Error(ssb::ErrorCode::ValidationError, "cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ssb::Stores load_or_empty(const std::string& snapshot_path) {
    if (std::filesystem::exists(snapshot_path)) {
        return ssb::load_snapshot(snapshot_path);
    }
    return ssb::Stores{};
}

int cmd_load(const std::string& snapshot_path, const std::string& input_path) {
    ssb::Stores stores = load_or_empty(snapshot_path);
    ssb::SnapshotCounts counts = ssb::apply_snapshot(stores, read_file(input_path));
    ssb::save_snapshot(stores, snapshot_path);
    std::cout << "business:" << counts.business << " service:" << counts.service
              << " binding:" << counts.binding << " tmodel:" << counts.tmodel
              << " actor:" << counts.actor << " edge:" << counts.edge << "\n";
    return 0;
}

int cmd_query(const std::string& snapshot_path, const std::string& consumer,
              const std::vector<std::string>& categories,
              const std::vector<std::string>& keywords,
              const std::vector<std::string>& tmodels, const std::string& social_text,
              const std::string& format) {
    ssb::Stores stores = ssb::load_snapshot(snapshot_path);

    ssb::BrokerRequest request;
    request.consumer = ssb::Key::parse(consumer);
    for (const std::string& c : categories) {
        auto colon = c.find(':');
        if (colon == std::string::npos) {
            throw ssb::Error(ssb::ErrorCode::ValidationError,
                             "--category must be tmodelKey:keyValue, got " + c);
        }
        request.service.categories.push_back(ssb::KeyedReference{
            ssb::Key::parse(c.substr(0, colon)), "", c.substr(colon + 1)});
    }
    request.service.keywords = keywords;
    for (const std::string& t : tmodels) {
        request.service.required_tmodels.push_back(ssb::Key::parse(t));
    }
    request.social = ssb::parse_social_requirement(social_text);

    ssb::BrokerResponse response =
        ssb::broker_query(stores.registry, stores.graph, request);

    if (format == "json") {
        std::cout << ssb::json(response).dump() << "\n";
    } else {
        std::printf("%-5s %-30s %-30s %s\n", "rank", "provider", "services", "scores");
        for (const ssb::RankedProvider& p : response.providers) {
            std::string services;
            for (const ssb::MatchedService& s : p.services) {
                if (!services.empty()) services += ", ";
                services += s.service.name;
            }
            std::string scores;
            for (const ssb::ScoreEntry& s : p.scores) {
                if (!scores.empty()) scores += "  ";
                scores += ssb::serialize_criterion(s.criterion) + "=";
                scores += s.value ? std::to_string(*s.value) : "unreachable";
            }
            std::printf("%-5d %-30s %-30s %s\n", p.rank, p.provider.name.c_str(),
                        services.c_str(), scores.c_str());
        }
        std::printf("excluded: %d\n", response.excluded_count);
    }
    return response.providers.empty() ? kExitEmpty : 0;
}

int cmd_generate(const ssb::GenSpec& spec, const std::string& out_path) {
    ssb::Stores stores = ssb::generate_stores(spec);
    ssb::save_snapshot(stores, out_path);
    std::cout << "actors:" << stores.graph.actor_count()
              << " edges:" << stores.graph.edge_count()
              << " providers:" << stores.registry.services().size() << " -> " << out_path
              << "\n";
    return 0;
}

int cmd_serve(const std::string& config_path) {
    ssb::ServerConfig config = config_path.empty()
                                   ? ssb::ServerConfig::from_env(ssb::ServerConfig{})
                                   : ssb::ServerConfig::load(config_path);
    ssb::BrokerServer server(config);
    g_server = &server;
    std::signal(SIGINT, [](int) { if (g_server) g_server->stop(); });
    std::signal(SIGTERM, [](int) { if (g_server) g_server->stop(); });
    std::cout << "listening on " << config.listen_address << ", snapshot "
              << config.snapshot_path.string() << "\n";
    server.run();
    g_server = nullptr;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Social service broker: UDDI-style registry search filtered and "
                 "ranked by social-graph requirements"};
    app.require_subcommand(1);

    std::string snapshot_path, input_path, consumer, social_text = "", format = "table";
    std::string config_path, out_path;
    std::vector<std::string> categories, keywords, tmodels;
    ssb::GenSpec spec{};

    auto* load = app.add_subcommand("load", "Merge a record file into a snapshot");
    load->add_option("snapshot", snapshot_path)->required();
    load->add_option("input", input_path)->required();

    auto* query = app.add_subcommand("query", "Run a one-shot broker query on a snapshot");
    query->add_option("snapshot", snapshot_path)->required();
    query->add_option("--consumer", consumer, "consumer actor key")->required();
    query->add_option("--category", categories, "tmodelKey:keyValue, repeatable");
    query->add_option("--keyword", keywords, "name/description keyword, repeatable");
    query->add_option("--tmodel", tmodels, "required tModel key, repeatable");
    query->add_option("--social", social_text, "social requirement text");
    query->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    auto* generate = app.add_subcommand("generate", "Write a deterministic synthetic snapshot");
    generate->add_option("--actors", spec.n_actors)->required();
    generate->add_option("--edges", spec.n_edges)->required();
    generate->add_option("--providers", spec.n_providers)->required();
    generate->add_option("--seed", spec.seed)->default_val(0);
    generate->add_option("out", out_path)->required();

    auto* serve = app.add_subcommand("serve", "Run the HTTP API server");
    serve->add_option("--config", config_path, "key=value config file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (load->parsed()) return cmd_load(snapshot_path, input_path);
        if (query->parsed()) {
            return cmd_query(snapshot_path, consumer, categories, keywords, tmodels,
                             social_text, format);
        }
        if (generate->parsed()) return cmd_generate(spec, out_path);
        if (serve->parsed()) return cmd_serve(config_path);
    } catch (const ssb::Error& e) {
        std::cerr << "error (" << e.code_name() << "): " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
