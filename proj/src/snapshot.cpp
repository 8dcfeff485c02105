#include "ssb/snapshot.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "ssb/error.hpp"
#include "ssb/json.hpp"

namespace ssb {

namespace {

struct Line {
    int number;  // 1-based
    json body;
    std::string kind;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        pos = end == std::string_view::npos ? text.size() : end + 1;
        ++number;
        if (raw.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        json body = json::parse(raw, nullptr, false);
        if (body.is_discarded() || !body.is_object()) {
            throw Error(ErrorCode::SnapshotCorrupt,
                        "line " + std::to_string(number) + ": not a JSON object", number);
        }
        auto kind_it = body.find("kind");
        if (kind_it == body.end() || !kind_it->is_string()) {
            throw Error(ErrorCode::SnapshotCorrupt,
                        "line " + std::to_string(number) + ": missing \"kind\"", number);
        }
        std::string kind = kind_it->get<std::string>();
        out.push_back(Line{number, std::move(body), std::move(kind)});
    }
    return out;
}

// Load order so records need not be topologically sorted in the file:
// tModels/businesses/actors, then services, then bindings/edges.
int pass_of(const std::string& kind) {
    if (kind == "tmodel" || kind == "business" || kind == "actor") return 0;
    if (kind == "service") return 1;
    if (kind == "binding" || kind == "edge") return 2;
    return -1;
}

void apply_line(Stores& stores, const Line& line) {
    try {
        if (line.kind == "tmodel") {
            stores.registry.register_tmodel(line.body.get<TModel>());
        } else if (line.kind == "business") {
            stores.registry.register_business(line.body.get<BusinessEntity>());
        } else if (line.kind == "actor") {
            stores.graph.add_actor(line.body.at("id").get<Key>());
        } else if (line.kind == "service") {
            stores.registry.publish_service(line.body.get<BusinessService>());
        } else if (line.kind == "binding") {
            stores.registry.publish_binding(line.body.get<BindingTemplate>());
        } else if (line.kind == "edge") {
            CollaborationEdge edge;
            line.body.at("a").get_to(edge.a);
            line.body.at("b").get_to(edge.b);
            edge.weight = line.body.value("weight", 1.0);
            stores.graph.add_collaboration(edge);
        } else {
            throw Error(ErrorCode::SnapshotCorrupt, "unknown kind \"" + line.kind + "\"");
        }
    } catch (const Error& e) {
        throw Error(e.code(), "line " + std::to_string(line.number) + ": " + e.what(),
                    line.number);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::SnapshotCorrupt,
                    "line " + std::to_string(line.number) + ": " + e.what(), line.number);
    }
}

}  // namespace

SnapshotCounts apply_snapshot(Stores& stores, std::string_view text) {
    SnapshotCounts counts;
    std::vector<Line> lines = split_lines(text);
    for (int pass = 0; pass < 3; ++pass) {
        for (const Line& line : lines) {
            int p = pass_of(line.kind);
            if (p == -1 && pass == 0) apply_line(stores, line);  // raises unknown-kind
            if (p == pass) apply_line(stores, line);
        }
    }
    for (const Line& line : lines) {
        if (line.kind == "business") ++counts.business;
        else if (line.kind == "service") ++counts.service;
        else if (line.kind == "binding") ++counts.binding;
        else if (line.kind == "tmodel") ++counts.tmodel;
        else if (line.kind == "actor") ++counts.actor;
        else if (line.kind == "edge") ++counts.edge;
    }
    return counts;
}

Stores parse_snapshot(std::string_view text) {
    Stores stores;
    apply_snapshot(stores, text);
    return stores;
}

Stores load_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::SnapshotCorrupt, "cannot open snapshot " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_snapshot(buf.str());
}

std::string dump_snapshot(const Stores& stores) {
    std::string out;
    auto emit = [&out](json j, const char* kind) {
        j["kind"] = kind;
        out += j.dump();
        out += '\n';
    };
    for (const auto& [key, tmodel] : stores.registry.tmodels()) emit(tmodel, "tmodel");
    for (const auto& [key, business] : stores.registry.businesses()) emit(business, "business");
    for (const auto& [key, service] : stores.registry.services()) emit(service, "service");
    for (const auto& [key, binding] : stores.registry.bindings()) emit(binding, "binding");
    for (const Key& actor : stores.graph.actors()) emit(json{{"id", actor}}, "actor");
    for (const CollaborationEdge& e : stores.graph.edges()) {
        emit(json{{"a", e.a}, {"b", e.b}, {"weight", e.weight}}, "edge");
    }
    return out;
}

void save_snapshot(const Stores& stores, const std::filesystem::path& path) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorCode::ValidationError, "cannot write snapshot " + tmp.string());
        }
        out << dump_snapshot(stores);
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace ssb
