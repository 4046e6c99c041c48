#include "milnor_tools/http_server.hpp"

#include <httplib.h>

#include <sys/socket.h>

namespace milnor::tools {

struct HttpServer::Impl {
  httplib::Server server;
};

namespace {

HttpRequest to_request(const httplib::Request& req) {
  HttpRequest out;
  out.method = req.method;
  out.path = req.path;
  out.body = req.body;
  for (const auto& [key, value] : req.params) out.query.emplace(key, value);
  return out;
}

}  // namespace

HttpServer::HttpServer(Service& service, std::optional<std::string> ui_dir) : impl_(std::make_unique<Impl>()) {
  auto& svr = impl_->server;
  // The library default also sets SO_REUSEPORT, which would let a second
  // server share a busy port instead of failing.
  svr.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  auto handler = [&service](const httplib::Request& req, httplib::Response& res) {
    const HttpResponse r = service.handle(to_request(req));
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  svr.Get("/api/.*", handler);
  svr.Post("/api/.*", handler);
  if (ui_dir) svr.set_mount_point("/", *ui_dir);
}

HttpServer::~HttpServer() { stop(); }

bool HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    port_ = impl_->server.bind_to_any_port(host);
    return port_ > 0;
  }
  if (!impl_->server.bind_to_port(host, port)) return false;
  port_ = port;
  return true;
}

bool HttpServer::run() { return impl_->server.listen_after_bind(); }

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

void HttpServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace milnor::tools
