#include "milnor_tools/http_server.hpp"
#include "milnor_tools/service.hpp"

#include <httplib.h>
#include <json.hpp>

#include <gtest/gtest.h>

#include <thread>

namespace milnor::tools {
namespace {

using nlohmann::json;

HttpResponse call(Service& s, const std::string& method, const std::string& path, const json& body = nullptr,
                  std::map<std::string, std::string> query = {}) {
  return s.handle(HttpRequest{method, path, std::move(query), body.is_null() ? "" : body.dump()});
}

std::string create(Service& s, const std::string& family, int p, int q, int r) {
  const auto res = call(s, "POST", "/api/session", json{{"family", family}, {"p", p}, {"q", q}, {"r", r}});
  EXPECT_EQ(res.status, 201) << res.body;
  return json::parse(res.body).at("id").get<std::string>();
}

TEST(Service, CreateSessionReturnsInitialDiagram) {
  Service s;
  const auto res = call(s, "POST", "/api/session", json{{"family", "T"}, {"p", 3}, {"q", 3}, {"r", 4}});
  ASSERT_EQ(res.status, 201);
  const json j = json::parse(res.body);
  EXPECT_FALSE(j.at("id").get<std::string>().empty());
  EXPECT_EQ(j.at("mu"), 9);
  EXPECT_EQ(j.at("revision"), 0);
  EXPECT_EQ(j.at("diagram").at("mu"), 9);
  // One double dashed edge.
  int negative = 0;
  for (const auto& e : j.at("diagram").at("edges"))
    if (e[2].get<int>() < 0) {
      ++negative;
      EXPECT_EQ(e[2], -2);
    }
  EXPECT_EQ(negative, 1);
}

TEST(Service, CreateSessionValidation) {
  Service s;
  auto res = call(s, "POST", "/api/session", json{{"family", "T"}, {"p", 1}, {"q", 3}, {"r", 4}});
  EXPECT_EQ(res.status, 400);
  EXPECT_EQ(json::parse(res.body).at("error").at("kind"), "FamilyParamError");
  res = call(s, "POST", "/api/session", json{{"family", "Q"}, {"p", 3}, {"q", 3}, {"r", 4}});
  EXPECT_EQ(res.status, 400);
  res = s.handle({"POST", "/api/session", {}, "{not json"});
  EXPECT_EQ(res.status, 400);
  EXPECT_EQ(json::parse(res.body).at("error").at("kind"), "FormatError");
  res = call(s, "POST", "/api/session", json{{"family", "T"}, {"p", 3}});
  EXPECT_EQ(res.status, 400);
  EXPECT_EQ(s.store().size(), 0u);
}

TEST(Service, TwoBetaTwoMovesFromTheSFamily) {
  Service s;
  const std::string id = create(s, "S", 3, 3, 3);
  call(s, "POST", "/api/session/" + id + "/apply", json{{"move", "b2"}});
  const auto res = call(s, "POST", "/api/session/" + id + "/apply", json{{"move", "b2"}});
  ASSERT_EQ(res.status, 200);
  const json j = json::parse(res.body);
  EXPECT_EQ(j.at("gram")[0][2], -2);
  EXPECT_EQ(j.at("gram")[1][2], -3);
  EXPECT_EQ(j.at("revision"), 2);
  EXPECT_EQ(j.at("history"), json::parse(R"(["b2","b2"])"));
}

TEST(Service, ApplyThenUndoRestoresByteIdenticalState) {
  Service s;
  const std::string id = create(s, "S", 2, 3, 6);
  const std::string before = call(s, "GET", "/api/session/" + id).body;
  const std::string export_before = call(s, "GET", "/api/session/" + id + "/export").body;
  for (const char* m : {"a3", "b5", "g2", "a1", "b9"})
    ASSERT_EQ(call(s, "POST", "/api/session/" + id + "/apply", json{{"move", m}}).status, 200);
  for (int i = 0; i < 5; ++i) ASSERT_EQ(call(s, "POST", "/api/session/" + id + "/undo").status, 200);
  EXPECT_EQ(call(s, "GET", "/api/session/" + id).body, before);
  EXPECT_EQ(call(s, "GET", "/api/session/" + id + "/export").body, export_before);
}

TEST(Service, UndoOnEmptyHistoryIsConflict) {
  Service s;
  const std::string id = create(s, "T", 3, 3, 3);
  const auto res = call(s, "POST", "/api/session/" + id + "/undo");
  EXPECT_EQ(res.status, 409);
}

TEST(Service, InvalidMovesLeaveStateUnchanged) {
  Service s;
  const std::string id = create(s, "S", 3, 3, 3);
  const std::string before = call(s, "GET", "/api/session/" + id).body;
  auto res = call(s, "POST", "/api/session/" + id + "/apply", json{{"move", "a99"}});
  EXPECT_EQ(res.status, 400);
  EXPECT_EQ(json::parse(res.body).at("error").at("kind"), "MoveRangeError");
  res = call(s, "POST", "/api/session/" + id + "/apply", json{{"move", "b1"}});
  EXPECT_EQ(json::parse(res.body).at("error").at("kind"), "MoveRangeError");
  res = call(s, "POST", "/api/session/" + id + "/apply", json{{"move", "zz"}});
  EXPECT_EQ(json::parse(res.body).at("error").at("kind"), "ParseError");
  // A word whose last move is invalid is rejected as a whole.
  res = call(s, "POST", "/api/session/" + id + "/apply", json{{"move", "b2, a99"}});
  EXPECT_EQ(res.status, 400);
  res = call(s, "POST", "/api/session/" + id + "/apply", json{{"moves", 3}});
  EXPECT_EQ(res.status, 400);
  EXPECT_EQ(call(s, "GET", "/api/session/" + id).body, before);
}

TEST(Service, GammaTwiceIsIdentity) {
  Service s;
  const std::string id = create(s, "S", 3, 3, 3);
  const json before = json::parse(call(s, "GET", "/api/session/" + id).body);
  const json after = json::parse(call(s, "POST", "/api/session/" + id + "/apply", json{{"move", "g1, g1"}}).body);
  EXPECT_EQ(after.at("gram"), before.at("gram"));
  EXPECT_EQ(after.at("revision"), 2);
}

TEST(Service, DiagramEndpoints) {
  Service s;
  const std::string id = create(s, "S", 3, 3, 3);
  const auto j = call(s, "GET", "/api/session/" + id + "/diagram");
  ASSERT_EQ(j.status, 200);
  EXPECT_EQ(json::parse(j.body).at("mu"), 9);
  const auto dot = call(s, "GET", "/api/session/" + id + "/diagram", nullptr, {{"format", "dot"}});
  ASSERT_EQ(dot.status, 200);
  EXPECT_EQ(dot.content_type, "text/vnd.graphviz");
  EXPECT_EQ(dot.body.rfind("graph ", 0), 0u);
  EXPECT_EQ(call(s, "GET", "/api/session/" + id + "/diagram", nullptr, {{"format", "png"}}).status, 400);
}

TEST(Service, ExportIsABasisDocument) {
  Service s;
  const std::string id = create(s, "T", 4, 3, 3);
  const json j = json::parse(call(s, "GET", "/api/session/" + id + "/export").body);
  EXPECT_EQ(j.at("mu"), 9);
  EXPECT_TRUE(j.contains("refGram"));
  EXPECT_TRUE(j.contains("rows"));
  EXPECT_EQ(j.at("family"), "T");
}

TEST(Service, FamiliesAndVerify) {
  Service s;
  const json fam = json::parse(call(s, "GET", "/api/families").body);
  EXPECT_EQ(fam.at("families").size(), 4u);
  const auto v = call(s, "GET", "/api/verify/thm2", nullptr, {{"case", "T433"}});
  ASSERT_EQ(v.status, 200);
  const json j = json::parse(v.body);
  EXPECT_EQ(j.at("passed"), true);
  EXPECT_EQ(j.at("reports")[0].at("stages").size(), 3u);
  EXPECT_EQ(json::parse(call(s, "GET", "/api/verify/witness", nullptr, {{"m", "-12"}}).body).at("passed"), true);
  EXPECT_EQ(call(s, "GET", "/api/verify/nope").status, 400);
  EXPECT_EQ(call(s, "GET", "/api/verify/prop1", nullptr, {{"kmax", "x"}}).status, 400);
}

TEST(Service, RoutingErrors) {
  Service s;
  EXPECT_EQ(call(s, "GET", "/api/session/unknown").status, 404);
  EXPECT_EQ(call(s, "POST", "/api/session/unknown/apply", json{{"move", "b2"}}).status, 404);
  EXPECT_EQ(call(s, "GET", "/api/nothing").status, 404);
  EXPECT_EQ(call(s, "GET", "/elsewhere").status, 404);
  const std::string id = create(s, "T", 3, 3, 3);
  EXPECT_EQ(call(s, "GET", "/api/session/" + id + "/apply").status, 405);
  EXPECT_EQ(call(s, "GET", "/api/session").status, 405);
  EXPECT_EQ(call(s, "GET", "/api/session/" + id + "/bogus").status, 404);
}

TEST(Service, ConcurrentSessionsAreIndependentAndSerialized) {
  Service s;
  const std::string shared = create(s, "S", 3, 3, 3);
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&s, &shared] {
      const std::string own = create(s, "T", 3, 3, 3);
      for (int i = 0; i < 25; ++i) {
        EXPECT_EQ(call(s, "POST", "/api/session/" + shared + "/apply", json{{"move", "g1"}}).status, 200);
        EXPECT_EQ(call(s, "POST", "/api/session/" + own + "/apply", json{{"move", "a1"}}).status, 200);
      }
      EXPECT_EQ(json::parse(call(s, "GET", "/api/session/" + own).body).at("revision"), 25);
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(json::parse(call(s, "GET", "/api/session/" + shared).body).at("revision"), 200);
  EXPECT_EQ(s.store().size(), 9u);
}

TEST(HttpServer, ServesTheApiOverTcp) {
  Service service;
  HttpServer server(service);
  ASSERT_TRUE(server.bind("127.0.0.1", 0));
  std::thread runner([&server] { server.run(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", server.port());
  auto created = client.Post("/api/session", R"({"family":"S","p":3,"q":3,"r":3})", "application/json");
  ASSERT_TRUE(created);
  EXPECT_EQ(created->status, 201);
  const std::string id = json::parse(created->body).at("id");
  client.Post("/api/session/" + id + "/apply", R"({"move":"b2"})", "application/json");
  auto applied = client.Post("/api/session/" + id + "/apply", R"({"move":"b2"})", "application/json");
  ASSERT_TRUE(applied);
  const json j = json::parse(applied->body);
  EXPECT_EQ(j.at("gram")[0][2], -2);
  EXPECT_EQ(j.at("gram")[1][2], -3);
  auto dot = client.Get("/api/session/" + id + "/diagram?format=dot");
  ASSERT_TRUE(dot);
  EXPECT_EQ(dot->get_header_value("Content-Type"), "text/vnd.graphviz");

  // A second server cannot take the same port.
  Service other;
  HttpServer clash(other);
  EXPECT_FALSE(clash.bind("127.0.0.1", server.port()));

  server.stop();
  runner.join();
}

}  // namespace
}  // namespace milnor::tools
