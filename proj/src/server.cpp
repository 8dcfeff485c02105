#include "ssb/server.hpp"

#include <cstdlib>
#include <fstream>

#include <httplib.h>

#include "ssb/broker.hpp"
#include "ssb/error.hpp"
#include "ssb/json.hpp"

namespace ssb {

namespace {

int http_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::ValidationError:
        case ErrorCode::SyntaxError:
        case ErrorCode::RangeError:
        case ErrorCode::SelfLoop:
            return 400;
        case ErrorCode::UnknownBusiness:
        case ErrorCode::UnknownService:
        case ErrorCode::UnknownTModel:
        case ErrorCode::UnknownActor:
        case ErrorCode::UnknownConsumer:
            return 404;
        case ErrorCode::DuplicateKey:
            return 409;
        default:
            return 500;
    }
}

void reply_json(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void reply_error(httplib::Response& res, const Error& e) {
    json body{{"code", e.code_name()}, {"message", e.what()}};
    if (e.position() >= 0) body["detail"] = json{{"position", e.position()}};
    reply_json(res, http_status(e.code()), body);
}

json parse_body(const httplib::Request& req) {
    json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded()) {
        throw Error(ErrorCode::ValidationError, "request body is not valid JSON");
    }
    return body;
}

}  // namespace

std::string ServerConfig::host() const {
    auto colon = listen_address.rfind(':');
    if (colon == std::string::npos || colon == 0) {
        throw Error(ErrorCode::BindError, "listen_address must be host:port: " + listen_address);
    }
    return listen_address.substr(0, colon);
}

int ServerConfig::port() const {
    auto colon = listen_address.rfind(':');
    if (colon == std::string::npos || colon + 1 >= listen_address.size()) {
        throw Error(ErrorCode::BindError, "listen_address must be host:port: " + listen_address);
    }
    try {
        return std::stoi(listen_address.substr(colon + 1));
    } catch (const std::exception&) {
        throw Error(ErrorCode::BindError, "bad port in listen_address: " + listen_address);
    }
}

ServerConfig ServerConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ValidationError, "cannot open config " + path.string());
    }
    ServerConfig config;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "listen_address") {
            config.listen_address = value;
        } else if (key == "snapshot_path") {
            config.snapshot_path = value;
        } else if (key == "snapshot_on_mutation") {
            config.snapshot_on_mutation = (value == "true" || value == "1");
        } else if (!key.empty()) {
            throw Error(ErrorCode::ValidationError, "unknown config key: " + key);
        }
    }
    return from_env(std::move(config));
}

ServerConfig ServerConfig::from_env(ServerConfig base) {
    if (const char* v = std::getenv("BROKER_LISTEN_ADDRESS")) base.listen_address = v;
    if (const char* v = std::getenv("BROKER_SNAPSHOT_PATH")) base.snapshot_path = v;
    if (const char* v = std::getenv("BROKER_SNAPSHOT_ON_MUTATION")) {
        base.snapshot_on_mutation = (std::string(v) == "true" || std::string(v) == "1");
    }
    return base;
}

BrokerServer::BrokerServer(ServerConfig config)
    : config_(std::move(config)), http_(std::make_unique<httplib::Server>()) {
    if (std::filesystem::exists(config_.snapshot_path)) {
        stores_ = load_snapshot(config_.snapshot_path);
    }
    setup_routes();
}

BrokerServer::~BrokerServer() {
    if (!stopped_) {
        try {
            stop();
        } catch (...) {
        }
    }
}

void BrokerServer::persist_locked() {
    if (config_.snapshot_on_mutation) save_snapshot(stores_, config_.snapshot_path);
}

std::string BrokerServer::dump() const {
    std::shared_lock lock(mutex_);
    return dump_snapshot(stores_);
}

void BrokerServer::setup_routes() {
    auto handle = [this](auto fn) {
        return [this, fn](const httplib::Request& req, httplib::Response& res) {
            try {
                fn(req, res);
            } catch (const Error& e) {
                reply_error(res, e);
            } catch (const json::exception& e) {
                reply_error(res, Error(ErrorCode::ValidationError, e.what()));
            } catch (const std::exception& e) {
                reply_json(res, 500, json{{"code", "internal_error"}, {"message", e.what()}});
            }
        };
    };

    // A mutation locks out readers, applies one store op, then rewrites the
    // snapshot. The store op validates before inserting, so a failure
    // leaves both the stores and the snapshot untouched.
    auto mutate = [this](auto op) {
        std::unique_lock lock(mutex_);
        auto result = op(stores_);
        persist_locked();
        return result;
    };

    http_->Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
        res.set_content("ok", "text/plain");
    });

    http_->Post("/registry/tmodels", handle([mutate](const httplib::Request& req,
                                                     httplib::Response& res) {
        Key key = mutate([&](Stores& s) {
            return s.registry.register_tmodel(parse_body(req).get<TModel>());
        });
        reply_json(res, 201, json{{"key", key}});
    }));

    http_->Post("/registry/businesses", handle([mutate](const httplib::Request& req,
                                                        httplib::Response& res) {
        Key key = mutate([&](Stores& s) {
            return s.registry.register_business(parse_body(req).get<BusinessEntity>());
        });
        reply_json(res, 201, json{{"key", key}});
    }));

    http_->Post(R"(/registry/businesses/([0-9a-fA-F-]+)/services)",
                handle([mutate](const httplib::Request& req, httplib::Response& res) {
                    Key owner = Key::parse(req.matches[1].str());
                    BusinessService service = parse_body(req).get<BusinessService>();
                    if (service.business_key != owner) {
                        throw Error(ErrorCode::ValidationError,
                                    "business_key in body does not match URL");
                    }
                    Key key = mutate(
                        [&](Stores& s) { return s.registry.publish_service(service); });
                    reply_json(res, 201, json{{"key", key}});
                }));

    http_->Post(R"(/registry/services/([0-9a-fA-F-]+)/bindings)",
                handle([mutate](const httplib::Request& req, httplib::Response& res) {
                    Key owner = Key::parse(req.matches[1].str());
                    BindingTemplate binding = parse_body(req).get<BindingTemplate>();
                    if (binding.service_key != owner) {
                        throw Error(ErrorCode::ValidationError,
                                    "service_key in body does not match URL");
                    }
                    Key key = mutate(
                        [&](Stores& s) { return s.registry.publish_binding(binding); });
                    reply_json(res, 201, json{{"key", key}});
                }));

    http_->Get(R"(/registry/businesses/([0-9a-fA-F-]+))",
               handle([this](const httplib::Request& req, httplib::Response& res) {
                   Key key = Key::parse(req.matches[1].str());
                   std::shared_lock lock(mutex_);
                   reply_json(res, 200, stores_.registry.get_business_detail(key));
               }));

    http_->Get("/registry/search",
               handle([this](const httplib::Request& req, httplib::Response& res) {
                   ServiceRequirements want;
                   auto range = req.params.equal_range("category");
                   for (auto it = range.first; it != range.second; ++it) {
                       auto colon = it->second.find(':');
                       if (colon == std::string::npos) {
                           throw Error(ErrorCode::ValidationError,
                                       "category must be tmodelKey:keyValue");
                       }
                       want.categories.push_back(
                           KeyedReference{Key::parse(it->second.substr(0, colon)), "",
                                          it->second.substr(colon + 1)});
                   }
                   range = req.params.equal_range("keyword");
                   for (auto it = range.first; it != range.second; ++it) {
                       want.keywords.push_back(it->second);
                   }
                   range = req.params.equal_range("tmodel");
                   for (auto it = range.first; it != range.second; ++it) {
                       want.required_tmodels.push_back(Key::parse(it->second));
                   }
                   std::shared_lock lock(mutex_);
                   reply_json(res, 200,
                              json{{"matches", stores_.registry.find_services(want)}});
               }));

    http_->Post("/graph/actors", handle([mutate](const httplib::Request& req,
                                                 httplib::Response& res) {
        Key id = parse_body(req).at("id").get<Key>();
        mutate([&](Stores& s) {
            s.graph.add_actor(id);
            return 0;
        });
        reply_json(res, 201, json{{"id", id}});
    }));

    http_->Post("/graph/edges", handle([mutate](const httplib::Request& req,
                                                httplib::Response& res) {
        json body = parse_body(req);
        CollaborationEdge edge;
        body.at("a").get_to(edge.a);
        body.at("b").get_to(edge.b);
        edge.weight = body.value("weight", 1.0);
        mutate([&](Stores& s) {
            s.graph.add_collaboration(edge);
            return 0;
        });
        reply_json(res, 201, json{{"a", edge.a}, {"b", edge.b}, {"weight", edge.weight}});
    }));

    http_->Get(R"(/graph/metrics/([0-9a-fA-F-]+))",
               handle([this](const httplib::Request& req, httplib::Response& res) {
                   Key id = Key::parse(req.matches[1].str());
                   std::shared_lock lock(mutex_);
                   reply_json(res, 200,
                              json{{"degree", stores_.graph.degree(id)},
                                   {"closeness", stores_.graph.closeness(id)},
                                   {"betweenness", stores_.graph.betweenness(id)}});
               }));

    http_->Post("/broker/query", handle([this](const httplib::Request& req,
                                               httplib::Response& res) {
        json body = parse_body(req);
        BrokerRequest request;
        body.at("consumer").get_to(request.consumer);
        if (body.contains("service")) body.at("service").get_to(request.service);
        if (auto it = body.find("social"); it != body.end()) {
            if (it->is_string()) {
                request.social = parse_social_requirement(it->get<std::string>());
            } else {
                it->get_to(request.social);
            }
        } else {
            request.social = SocialRequirement::defaulted();
        }
        std::shared_lock lock(mutex_);
        reply_json(res, 200, broker_query(stores_.registry, stores_.graph, request));
    }));
}

void BrokerServer::run() {
    const std::string host = config_.host();
    const int port = config_.port();
    bound_port_ = port;
    if (!http_->bind_to_port(host, port)) {
        throw Error(ErrorCode::BindError, "cannot bind " + config_.listen_address);
    }
    http_->listen_after_bind();
    std::unique_lock lock(mutex_);
    save_snapshot(stores_, config_.snapshot_path);
    stopped_ = true;
}

void BrokerServer::start_background() {
    const std::string host = config_.host();
    const int port = config_.port();
    if (port == 0) {
        bound_port_ = http_->bind_to_any_port(host);
        if (bound_port_ < 0) {
            throw Error(ErrorCode::BindError, "cannot bind " + config_.listen_address);
        }
    } else {
        if (!http_->bind_to_port(host, port)) {
            throw Error(ErrorCode::BindError, "cannot bind " + config_.listen_address);
        }
        bound_port_ = port;
    }
    listener_ = std::thread([this] { http_->listen_after_bind(); });
    http_->wait_until_ready();
}

void BrokerServer::stop() {
    http_->stop();
    if (listener_.joinable()) listener_.join();
    std::unique_lock lock(mutex_);
    save_snapshot(stores_, config_.snapshot_path);
    stopped_ = true;
}

}  // namespace ssb
