#include <httplib.h>

#include "radiogram/service.hpp"

namespace radiogram::service {

struct HttpServer::Impl {
    SessionService& service;
    httplib::Server server;

    explicit Impl(SessionService& s) : service(s) {}

    void route(const httplib::Request& req, httplib::Response& res) {
        Request request;
        request.method = req.method;
        request.path = req.path;
        request.body = req.body;
        for (const auto& [k, v] : req.params) request.query.emplace(k, v);
        Response response = service.handle(request);
        res.status = response.status;
        res.set_content(response.body.dump(), "application/json");
    }
};

HttpServer::HttpServer(SessionService& service, std::optional<std::filesystem::path> static_dir)
    : impl_(std::make_unique<Impl>(service)) {
    auto handler = [this](const httplib::Request& req, httplib::Response& res) { impl_->route(req, res); };
    if (static_dir) impl_->server.set_mount_point("/", static_dir->string());
    impl_->server.Get(R"(/(sessions|catalog|health)(/.*)?)", handler);
    impl_->server.Post(R"(/sessions(/.*)?)", handler);
    impl_->server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
    if (port == 0) return impl_->server.bind_to_any_port(host);
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
    if (impl_) impl_->server.stop();
}

}  // namespace radiogram::service
