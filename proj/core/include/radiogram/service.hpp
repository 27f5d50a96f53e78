#pragma once

// Session service behind the explorer UI. Routing and session state live in
// SessionService, which speaks plain Request/Response values; HttpServer
// puts it on a socket.

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "radiogram/catalog.hpp"
#include "radiogram/grammar.hpp"
#include "radiogram/serialize.hpp"

namespace radiogram::service {

struct Request {
    std::string method;
    std::string path;
    std::map<std::string, std::string> query;
    std::string body;
};

struct Response {
    int status = 200;
    json body;
};

struct Session {
    std::string id;
    Design current;
    std::vector<Design> undo;
    std::vector<Design> redo;
    std::chrono::system_clock::time_point created_at;
    /// Mutations of one session are serialized.
    std::mutex mutex;
};

struct ServiceOptions {
    std::optional<std::filesystem::path> persist_dir;
    /// Largest depth /catalog will enumerate.
    int max_catalog_depth = 2;
    unsigned catalog_threads = 1;
};

class SessionService {
public:
    explicit SessionService(ServiceOptions options = {});

    Response handle(const Request& request);

    std::size_t session_count() const;

private:
    Response create_session(const Request& request);
    Response session_route(const std::string& id, std::string_view action, const Request& request);
    Response catalog(const Request& request);

    std::shared_ptr<Session> find(const std::string& id) const;
    void persist(const Session& s) const;
    void restore();
    std::shared_ptr<const Catalog> cached_catalog(GrammarId grammar, int depth);

    ServiceOptions options_;
    mutable std::shared_mutex sessions_mutex_;
    std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
    std::mutex catalog_mutex_;
    std::map<std::tuple<GrammarId, int>, std::shared_ptr<const Catalog>> catalogs_;
};

class HttpServer {
public:
    /// Optional directory of static assets served under "/".
    HttpServer(SessionService& service, std::optional<std::filesystem::path> static_dir = std::nullopt);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Binds; port 0 picks a free one. Returns the bound port or -1.
    int bind(const std::string& host, int port);
    /// Blocks until stop().
    bool listen();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace radiogram::service
