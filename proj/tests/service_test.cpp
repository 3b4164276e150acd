// Copyright 2026 The idwmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "idwmap/service.hpp"

#include <gtest/gtest.h>

#include <httplib.h>

#include <filesystem>
#include <thread>

#include "idwmap/ingest.hpp"

namespace idwmap {
namespace {

using nlohmann::json;
using namespace std::chrono_literals;

std::shared_ptr<const App> trelis() {
  static const auto app = load_app(std::filesystem::path(IDWMAP_SOURCE_DIR) / "apps/trelis/trelis.json");
  return app;
}

std::size_t count_years(const App& app, std::initializer_list<const char*> years) {
  const auto& ds = app.index->dataset();
  const auto& col = ds.column(*ds.find_column("cohort_year"));
  std::size_t n = 0;
  for (std::size_t r = 0; r < ds.record_count(); ++r) {
    for (const char* y : years) {
      if (!col.is_null(r) && col.string(r) == y) ++n;
    }
  }
  return n;
}

struct Fixture : ::testing::Test {
  std::chrono::steady_clock::time_point now{};
  Api api{{trelis()}, 60s, [this] { return now; }};

  HttpResponse call(std::string method, std::string path, std::string body = {},
                    std::map<std::string, std::string> query = {}) {
    return api.handle({std::move(method), std::move(path), std::move(query), std::move(body)});
  }
  std::string open() {
    const auto r = call("POST", "/apps/trelis/sessions");
    EXPECT_EQ(r.status, 201);
    return json::parse(r.body).at("session").get<std::string>();
  }
};

TEST_F(Fixture, ListsApps) {
  const auto r = call("GET", "/apps");
  ASSERT_EQ(r.status, 200);
  const auto j = json::parse(r.body);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["name"], "trelis");
  EXPECT_EQ(call("POST", "/apps").status, 405);
  EXPECT_EQ(call("GET", "/apps/trelis/sessions").status, 405);
  EXPECT_EQ(call("POST", "/apps/nope/sessions").status, 404);
  EXPECT_EQ(call("GET", "/elsewhere").status, 404);
}

TEST_F(Fixture, CreateSessionReturnsInitialState) {
  const auto r = call("POST", "/apps/trelis/sessions");
  ASSERT_EQ(r.status, 201);
  const auto j = json::parse(r.body);
  EXPECT_EQ(j["state"]["counter"]["selected"], 71);
  EXPECT_EQ(j["state"]["counter"]["total"], 71);
  EXPECT_TRUE(j["state"]["filters"].empty());
  EXPECT_EQ(j["state"]["components"].size(), trelis()->config.components.size());
  EXPECT_EQ(api.sessions().size(), 1u);
}

TEST_F(Fixture, FilterRoundTrip) {
  const auto id = open();
  const json spec = {{"type", "value_set"}, {"values", {"2018", "2019"}}};
  auto r = call("PUT", "/sessions/" + id + "/filters/cohort_year", spec.dump());
  ASSERT_EQ(r.status, 200) << r.body;
  auto j = json::parse(r.body);
  EXPECT_EQ(j["counter"]["selected"], count_years(*trelis(), {"2018", "2019"}));
  EXPECT_EQ(j["filters"]["cohort_year"], spec);

  j = json::parse(call("GET", "/sessions/" + id + "/state").body);
  EXPECT_EQ(j["filters"]["cohort_year"], spec);
  for (const auto& c : j["components"]) {
    if (c["id"] == "cohort_year") {
      std::size_t sum = 0;
      for (const auto& g : c["data"]["bins"]) sum += g["value"].get<std::size_t>();
      EXPECT_EQ(sum, 71u);
    }
  }

  const auto table = json::parse(call("GET", "/sessions/" + id + "/table", {}, {{"limit", "5"}}).body);
  EXPECT_EQ(table["visible"], count_years(*trelis(), {"2018", "2019"}));
  EXPECT_EQ(table["rows"].size(), 5u);

  r = call("DELETE", "/sessions/" + id + "/filters/cohort_year");
  EXPECT_EQ(json::parse(r.body)["counter"]["selected"], 71);
  call("PUT", "/sessions/" + id + "/filters/3", spec.dump());
  r = call("DELETE", "/sessions/" + id + "/filters");
  EXPECT_EQ(json::parse(r.body)["counter"]["selected"], 71);
}

TEST_F(Fixture, SessionsAreIsolated) {
  const auto a = open();
  const auto b = open();
  EXPECT_NE(a, b);
  call("PUT", "/sessions/" + a + "/filters/cohort_year", R"({"type":"value_set","values":["2020"]})");
  EXPECT_EQ(json::parse(call("GET", "/sessions/" + b + "/state").body)["counter"]["selected"], 71);
  EXPECT_EQ(json::parse(call("GET", "/sessions/" + a + "/state").body)["counter"]["selected"],
            count_years(*trelis(), {"2020"}));
}

TEST_F(Fixture, ErrorStatuses) {
  const auto id = open();
  const auto base = "/sessions/" + id;
  auto r = call("PUT", base + "/filters/nope", R"({"type":"value_set","values":["x"]})");
  EXPECT_EQ(r.status, 404);
  EXPECT_EQ(json::parse(r.body)["error"], "UnknownDimension");
  r = call("PUT", base + "/filters/cohort_year", R"({"type":"range","lo":1,"hi":2})");
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(json::parse(r.body)["error"], "IllegalFilterKind");
  EXPECT_EQ(call("PUT", base + "/filters/cohort_year", "{not json").status, 400);
  EXPECT_EQ(call("PUT", base + "/filters/cohort_year", R"({"type":"cube"})").status, 400);
  EXPECT_EQ(call("POST", base + "/filters/cohort_year").status, 405);
  EXPECT_EQ(call("POST", base + "/filters").status, 405);
  EXPECT_EQ(call("GET", base + "/table", {}, {{"limit", "-1"}}).status, 400);
  EXPECT_EQ(call("GET", base + "/table", {}, {{"dir", "up"}}).status, 400);
  EXPECT_EQ(call("GET", base + "/clusters", {}, {{"bbox", "1,2,3"}}).status, 400);
  EXPECT_EQ(call("GET", base + "/clusters", {}, {{"bbox", "10,0,0,10"}}).status, 400);
  EXPECT_EQ(call("GET", base + "/nothing").status, 404);
  r = call("GET", "/sessions/deadbeef/state");
  EXPECT_EQ(r.status, 404);
  EXPECT_EQ(json::parse(r.body)["error"], "UnknownSession");
}

TEST_F(Fixture, ExpiredSessionsAnswer410) {
  const auto id = open();
  now += 59s;
  EXPECT_EQ(call("GET", "/sessions/" + id + "/state").status, 200);
  now += 61s;
  auto r = call("GET", "/sessions/" + id + "/state");
  EXPECT_EQ(r.status, 410);
  EXPECT_EQ(json::parse(r.body)["error"], "SessionExpired");
  EXPECT_EQ(call("GET", "/sessions/" + id + "/state").status, 410);
  EXPECT_EQ(api.sessions().size(), 0u);
}

TEST_F(Fixture, ClustersTermsAndExport) {
  const auto id = open();
  const auto base = "/sessions/" + id;
  for (const char* z : {"0", "3", "8"}) {
    const auto j = json::parse(call("GET", base + "/clusters", {}, {{"zoom", z}}).body);
    std::size_t sum = 0;
    for (const auto& c : j["clusters"]) sum += c["count"].get<std::size_t>();
    EXPECT_EQ(sum, 71u) << z;
  }
  const auto terms = json::parse(call("GET", base + "/terms", {}, {{"k", "5"}}).body);
  EXPECT_LE(terms.size(), 5u);
  EXPECT_FALSE(terms.empty());

  const auto r = call("GET", base + "/export.csv");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.content_type, "text/csv");
  ASSERT_EQ(r.headers.size(), 1u);
  EXPECT_EQ(r.headers[0].first, "Content-Disposition");
  EXPECT_EQ(r.headers[0].second, "attachment; filename=\"trelis.csv\"");
  const auto back = parse_tabular(r.body, InputFormat::csv, trelis()->config.schema_hints());
  EXPECT_EQ(back.record_count(), 71u);
}

TEST(HttpServer, ServesOverLoopback) {
  Api api({trelis()}, 60s);
  HttpServer server(api);
  const int port = server.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto created = client.Post("/apps/trelis/sessions", "", "application/json");
  ASSERT_TRUE(created);
  EXPECT_EQ(created->status, 201);
  const auto id = json::parse(created->body)["session"].get<std::string>();
  auto put = client.Put("/sessions/" + id + "/filters/cohort_year", R"({"type":"value_set","values":["2018"]})",
                        "application/json");
  ASSERT_TRUE(put);
  EXPECT_EQ(json::parse(put->body)["counter"]["selected"], count_years(*trelis(), {"2018"}));
  auto exported = client.Get("/sessions/" + id + "/export.csv");
  ASSERT_TRUE(exported);
  EXPECT_EQ(exported->get_header_value("Content-Type"), "text/csv");
  auto missing = client.Get("/sessions/none/state");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);

  server.stop();
  worker.join();
}

}  // namespace
}  // namespace idwmap
