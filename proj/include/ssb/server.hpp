#pragma once

#include <filesystem>
#include <memory>
#include <shared_mutex>
#include <string>
#include <thread>

#include "ssb/snapshot.hpp"

namespace httplib {
class Server;
}

namespace ssb {

struct ServerConfig {
    std::string listen_address = "127.0.0.1:8080";  // host:port
    std::filesystem::path snapshot_path = "broker.snapshot";
    bool snapshot_on_mutation = true;

    std::string host() const;
    int port() const;

    /// key=value lines; '#' comments. Environment variables
    /// BROKER_LISTEN_ADDRESS, BROKER_SNAPSHOT_PATH and
    /// BROKER_SNAPSHOT_ON_MUTATION override file values.
    static ServerConfig load(const std::filesystem::path& path);
    static ServerConfig from_env(ServerConfig base);
};

/// HTTP front for registry, graph and broker. JSON bodies throughout;
/// errors map to 400 (validation/syntax), 404 (unknown keys), 409
/// (duplicates), 500 (internal), always with an {"code","message"} body.
///
/// Mutations take the writer lock and, by default, rewrite the snapshot
/// synchronously; searches and queries share the reader lock.
class BrokerServer {
public:
    /// Loads the snapshot when the file exists; SnapshotCorrupt refuses to
    /// start.
    explicit BrokerServer(ServerConfig config);
    ~BrokerServer();

    BrokerServer(const BrokerServer&) = delete;
    BrokerServer& operator=(const BrokerServer&) = delete;

    /// Blocks until stop(). Throws BindError when the address is taken or
    /// unparseable.
    void run();

    /// Starts the listener on a background thread; picks a free port when
    /// the configured port is 0. Returns once the server accepts requests.
    void start_background();

    /// Stops the listener and flushes a final snapshot.
    void stop();

    int bound_port() const { return bound_port_; }

    /// Read access to the stores, for tests and the final flush.
    std::string dump() const;

private:
    void setup_routes();
    void persist_locked();

    ServerConfig config_;
    Stores stores_;
    mutable std::shared_mutex mutex_;
    std::unique_ptr<httplib::Server> http_;
    std::thread listener_;
    int bound_port_ = 0;
    bool stopped_ = false;
};

}  // namespace ssb
