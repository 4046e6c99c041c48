#pragma once

#include "milnor/braid.hpp"
#include "milnor/families.hpp"
#include "milnor/lattice.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace milnor::tools {

struct HttpRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

// One exploration session: the current basis plus every earlier state, so
// undo restores the previous state exactly.
struct Session {
  std::string id;
  FamilySpec family;
  Basis basis;
  std::vector<Basis> previous;
  std::vector<Move> history;
  std::mutex mutex;

  Session(std::string id_, FamilySpec family_, Basis basis_)
      : id(std::move(id_)), family(family_), basis(std::move(basis_)) {}
  std::size_t revision() const noexcept { return history.size(); }
};

// Thread-safe registry. Lookups lock the registry briefly; mutations of one
// session are serialized by that session's own mutex.
class SessionStore {
 public:
  std::shared_ptr<Session> create(const FamilySpec& spec);
  std::shared_ptr<Session> find(const std::string& id) const;
  std::size_t size() const;

 private:
  std::string next_id();

  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  unsigned long long counter_ = 0;
};

// Routes /api/... requests. Deterministic in (session state, request).
class Service {
 public:
  HttpResponse handle(const HttpRequest& request);
  SessionStore& store() noexcept { return store_; }

 private:
  HttpResponse create_session(const HttpRequest& request);
  HttpResponse session_action(const std::string& id, const std::string& action, const HttpRequest& request);

  SessionStore store_;
};

}  // namespace milnor::tools
