#include "milnor_tools/service.hpp"

#include "milnor/diagram.hpp"
#include "milnor/errors.hpp"
#include "milnor/json.hpp"
#include "milnor/move_dsl.hpp"
#include "milnor_tools/checks.hpp"

#include <charconv>
#include <random>
#include <sstream>

namespace milnor::tools {

using nlohmann::json;

namespace {

HttpResponse json_response(int status, const json& body) { return {status, "application/json", body.dump()}; }

HttpResponse error_response(int status, const std::string& kind, const std::string& message) {
  return json_response(status, json{{"error", {{"kind", kind}, {"message", message}}}});
}

json session_json(const Session& s) {
  json history = json::array();
  for (Move m : s.history) history.push_back(to_string(m));
  const IntMatrix gram = gram_of_basis(s.basis);
  return json{{"id", s.id},
              {"family", {{"name", family_name(s.family.family)}, {"p", s.family.p}, {"q", s.family.q}, {"r", s.family.r}}},
              {"mu", s.basis.size()},
              {"revision", s.revision()},
              {"history", std::move(history)},
              {"gram", matrix_to_json(gram)},
              {"diagram", diagram_to_json(diagram_from_gram(gram))}};
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream is(path);
  while (std::getline(is, part, '/'))
    if (!part.empty()) parts.push_back(part);
  return parts;
}

int int_field(const json& body, const char* key) {
  if (!body.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  const json& v = body.at(key);
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    int out = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec == std::errc() && ptr == s.data() + s.size()) return out;
  }
  throw FormatError(std::string("field \"") + key + "\" must be an integer");
}

std::optional<int> query_int(const HttpRequest& r, const std::string& key) {
  auto it = r.query.find(key);
  if (it == r.query.end()) return std::nullopt;
  int out = 0;
  auto [ptr, ec] = std::from_chars(it->second.data(), it->second.data() + it->second.size(), out);
  if (ec != std::errc() || ptr != it->second.data() + it->second.size())
    throw UsageError("query parameter '" + key + "' must be an integer");
  return out;
}

std::optional<std::string> query_string(const HttpRequest& r, const std::string& key) {
  auto it = r.query.find(key);
  if (it == r.query.end()) return std::nullopt;
  return it->second;
}

json families_json() {
  struct Entry {
    Family family;
    const char* mu;
  };
  json out = json::array();
  for (const Entry& e : {Entry{Family::GabrielovT, "p+q+r-1"}, Entry{Family::T, "p+q+r-1"},
                         Entry{Family::Abb15, "p+q+r"}, Entry{Family::S, "p+q+r"}})
    out.push_back({{"name", family_name(e.family)}, {"params", {"p", "q", "r"}}, {"minParam", 2}, {"mu", e.mu}});
  return json{{"families", std::move(out)}};
}

}  // namespace

std::string SessionStore::next_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::ostringstream os;
  os << std::hex << rng() << "-" << ++counter_;
  return os.str();
}

std::shared_ptr<Session> SessionStore::create(const FamilySpec& spec) {
  FamilyInstance inst = build_family(spec);
  std::lock_guard lock(mutex_);
  auto session = std::make_shared<Session>(next_id(), spec, std::move(inst.basis));
  sessions_.emplace(session->id, session);
  return session;
}

std::shared_ptr<Session> SessionStore::find(const std::string& id) const {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::size_t SessionStore::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

HttpResponse Service::handle(const HttpRequest& request) {
  try {
    const auto parts = split_path(request.path);
    if (parts.empty() || parts[0] != "api") return error_response(404, "NotFound", "no such endpoint");

    if (parts.size() == 2 && parts[1] == "families") {
      if (request.method != "GET") return error_response(405, "MethodNotAllowed", "use GET");
      return json_response(200, families_json());
    }
    if (parts.size() == 3 && parts[1] == "verify") {
      if (request.method != "GET") return error_response(405, "MethodNotAllowed", "use GET");
      CheckOptions o;
      o.kmax = query_int(request, "kmax");
      o.p = query_int(request, "p");
      o.q = query_int(request, "q");
      o.r = query_int(request, "r");
      o.case_name = query_string(request, "case");
      o.variant = query_string(request, "variant");
      if (auto m = query_string(request, "m")) o.m = integer_from_json(json(*m));
      const auto reports = run_named_check(parts[2], o);
      json list = json::array();
      bool passed = true;
      for (const auto& r : reports) {
        passed = passed && r.passed;
        list.push_back(report_to_json(r));
      }
      return json_response(200, json{{"name", parts[2]}, {"passed", passed}, {"reports", std::move(list)}});
    }
    if (parts.size() >= 2 && parts[1] == "session") {
      if (parts.size() == 2) {
        if (request.method != "POST") return error_response(405, "MethodNotAllowed", "use POST");
        return create_session(request);
      }
      if (parts.size() <= 4) return session_action(parts[2], parts.size() == 4 ? parts[3] : "", request);
    }
    return error_response(404, "NotFound", "no such endpoint");
  } catch (const Error& e) {
    return error_response(e.kind() == "MethodNotAllowed" ? 405 : 400, e.kind(), e.what());
  } catch (const json::exception& e) {
    return error_response(400, "FormatError", e.what());
  } catch (const std::invalid_argument& e) {
    return error_response(400, "InvalidArgument", e.what());
  } catch (const std::exception& e) {
    return error_response(500, "InternalError", e.what());
  }
}

HttpResponse Service::create_session(const HttpRequest& request) {
  const json body = json::parse(request.body.empty() ? "{}" : request.body);
  if (!body.is_object()) throw FormatError("request body must be a JSON object");
  if (!body.contains("family") || !body.at("family").is_string())
    throw FormatError("missing string field \"family\"");
  FamilySpec spec{parse_family(body.at("family").get<std::string>()), int_field(body, "p"), int_field(body, "q"),
                  int_field(body, "r")};
  auto session = store_.create(spec);
  std::lock_guard lock(session->mutex);
  return json_response(201, session_json(*session));
}

HttpResponse Service::session_action(const std::string& id, const std::string& action, const HttpRequest& request) {
  auto session = store_.find(id);
  if (!session) return error_response(404, "UnknownSession", "no session '" + id + "'");
  std::lock_guard lock(session->mutex);
  Session& s = *session;

  auto expect = [&request](const char* method) {
    if (request.method != method) throw Error("MethodNotAllowed", std::string("use ") + method);
  };

  if (action.empty()) {
    expect("GET");
    return json_response(200, session_json(s));
  }
  if (action == "apply") {
    expect("POST");
    const json body = json::parse(request.body.empty() ? "{}" : request.body);
    const char* key = body.is_object() && body.contains("move") ? "move" : "moves";
    if (!body.is_object() || !body.contains(key) || !body.at(key).is_string())
      throw FormatError("missing string field \"move\"");
    const MoveSeq word = parse_moves(body.at(key).get<std::string>());
    // Validate the whole word before touching the session.
    for (std::size_t k = 0; k < word.moves.size(); ++k) {
      if (!valid_for(word.moves[k], s.basis.size()))
        throw MoveRangeError(to_string(word.moves[k]) + " is not a valid move for mu = " +
                                 std::to_string(s.basis.size()),
                             k);
    }
    for (Move m : word.moves) {
      Basis next = apply_move(s.basis, m);
      s.previous.push_back(std::move(s.basis));
      s.basis = std::move(next);
      s.history.push_back(m);
    }
    return json_response(200, session_json(s));
  }
  if (action == "undo") {
    expect("POST");
    if (s.history.empty()) return error_response(409, "EmptyHistory", "nothing to undo");
    s.basis = std::move(s.previous.back());
    s.previous.pop_back();
    s.history.pop_back();
    return json_response(200, session_json(s));
  }
  if (action == "diagram") {
    expect("GET");
    const Diagram d = diagram_from_gram(gram_of_basis(s.basis));
    auto format = request.query.find("format");
    if (format != request.query.end() && format->second == "dot")
      return {200, "text/vnd.graphviz", to_dot(d, "session")};
    if (format != request.query.end() && format->second != "json")
      throw FormatError("unknown diagram format '" + format->second + "'");
    json out = diagram_to_json(d);
    out["revision"] = s.revision();
    return json_response(200, out);
  }
  if (action == "export") {
    expect("GET");
    json out = basis_to_json(s.basis);
    out["family"] = family_name(s.family.family);
    out["p"] = s.family.p;
    out["q"] = s.family.q;
    out["r"] = s.family.r;
    return json_response(200, out);
  }
  return error_response(404, "NotFound", "no such session endpoint '" + action + "'");
}

}  // namespace milnor::tools
