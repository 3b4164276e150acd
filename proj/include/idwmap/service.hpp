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

#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "idwmap/config.hpp"
#include "idwmap/engine.hpp"
#include "idwmap/validate.hpp"

namespace idwmap {

// A loaded app: config, immutable indexes, and a pristine engine that new
// sessions copy.
struct App {
  AppConfig config;
  std::shared_ptr<const IndexSet> index;
  Engine pristine;
  std::vector<Diagnostic> diagnostics;
};

// Loads the dataset and builds every index. Throws InvalidConfig when the
// validator reports errors.
std::shared_ptr<const App> load_app(const std::filesystem::path& config_path);
std::shared_ptr<const App> make_app(AppConfig config, Dataset dataset);

// One entry per configured component, all computed from the same engine
// state.
nlohmann::json state_payload(const App& app, const Engine& engine);

class SessionStore {
 public:
  using Clock = std::function<std::chrono::steady_clock::time_point()>;

  struct Session {
    Session(std::string id, std::shared_ptr<const App> app, std::chrono::steady_clock::time_point now)
        : id(std::move(id)), app(std::move(app)), engine(this->app->pristine), last_touch(now) {}

    const std::string id;
    const std::shared_ptr<const App> app;
    // Guarded by `mutex`: exclusive for filter changes, shared for reads.
    Engine engine;
    std::shared_mutex mutex;
    std::chrono::steady_clock::time_point last_touch;
  };

  enum class Status { ok, missing, expired };

  explicit SessionStore(std::chrono::seconds ttl, Clock clock = &std::chrono::steady_clock::now);

  std::shared_ptr<Session> create(std::shared_ptr<const App> app);
  // Touches the session on success. Expired sessions are dropped and
  // remembered so later lookups keep answering `expired`.
  std::pair<std::shared_ptr<Session>, Status> find(const std::string& id);
  std::size_t size() const;

 private:
  void sweep(std::chrono::steady_clock::time_point now);

  std::chrono::seconds ttl_;
  Clock clock_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
  std::unordered_set<std::string> expired_;
};

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
  std::vector<std::pair<std::string, std::string>> headers;
};

// Transport-independent request router for the dashboard API.
class Api {
 public:
  Api(std::vector<std::shared_ptr<const App>> apps, std::chrono::seconds ttl,
      SessionStore::Clock clock = &std::chrono::steady_clock::now);

  HttpResponse handle(const HttpRequest& request);

  SessionStore& sessions() { return sessions_; }

 private:
  HttpResponse create_session(const std::string& app);
  HttpResponse session_route(const HttpRequest& request, const std::vector<std::string>& parts);

  std::map<std::string, std::shared_ptr<const App>> apps_;
  SessionStore sessions_;
};

// cpp-httplib front end; optionally serves a static UI bundle under "/".
class HttpServer {
 public:
  HttpServer(Api& api, std::optional<std::filesystem::path> static_dir = std::nullopt);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  bool listen(const std::string& host, int port);
  int bind_to_any_port(const std::string& host);
  bool listen_after_bind();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace idwmap
