#pragma once

#include "milnor_tools/service.hpp"

#include <memory>
#include <optional>
#include <string>

namespace milnor::tools {

// httplib front end for Service: /api/* goes to the handler, everything else
// is served from the optional static UI directory.
class HttpServer {
 public:
  explicit HttpServer(Service& service, std::optional<std::string> ui_dir = std::nullopt);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Returns false when the port is taken. Port 0 picks a free port.
  bool bind(const std::string& host, int port);
  int port() const noexcept { return port_; }
  // Blocks until stop() is called.
  bool run();
  void wait_until_ready() const;
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int port_ = -1;
};

}  // namespace milnor::tools
