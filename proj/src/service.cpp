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

#include <random>
#include <sstream>

#include <httplib.h>

#include "idwmap/error.hpp"
#include "idwmap/geo.hpp"
#include "idwmap/ingest.hpp"
#include "idwmap/text.hpp"
#include "idwmap/wire.hpp"

namespace idwmap {

namespace {

using nlohmann::json;

constexpr std::size_t kDefaultCloudTerms = 50;

HttpResponse json_response(int status, const json& body) {
  HttpResponse r;
  r.status = status;
  r.body = body.dump();
  return r;
}

HttpResponse error_response(int status, std::string_view code, const std::string& message) {
  return json_response(status, {{"error", code}, {"message", message}});
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownDimension:
      return 404;
    default:
      return 400;
  }
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : path) {
    if (c == '/') {
      if (!current.empty()) parts.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) parts.push_back(std::move(current));
  return parts;
}

std::size_t query_size(const HttpRequest& req, const std::string& key, std::size_t fallback) {
  auto it = req.query.find(key);
  if (it == req.query.end() || it->second.empty()) return fallback;
  auto v = parse_number(it->second);
  if (!v || *v < 0 || *v != static_cast<double>(static_cast<std::size_t>(*v))) {
    throw Error(ErrorCode::InvalidQuery, "query parameter '" + key + "' must be a non-negative integer");
  }
  return static_cast<std::size_t>(*v);
}

DimensionId resolve_dimension(const IndexSet& index, const std::string& token) {
  if (auto d = index.find_dimension(token)) return *d;
  if (auto n = parse_number(token); n && *n >= 0 && *n == static_cast<double>(static_cast<DimensionId>(*n))) {
    const auto id = static_cast<DimensionId>(*n);
    if (id < index.dimension_count()) return id;
  }
  throw Error(ErrorCode::UnknownDimension, "no dimension '" + token + "'");
}

filter::BBox parse_bbox(const std::string& text) {
  std::vector<double> v;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    auto n = parse_number(std::string_view(text).substr(start, end - start));
    if (!n) throw Error(ErrorCode::InvalidBbox, "bbox must be min_lat,min_lon,max_lat,max_lon");
    v.push_back(*n);
    start = end + 1;
  }
  if (v.size() != 4) throw Error(ErrorCode::InvalidBbox, "bbox must be min_lat,min_lon,max_lat,max_lon");
  filter::BBox box{v[0], v[1], v[2], v[3]};
  check_bbox(box);
  return box;
}

std::string new_session_id() {
  static std::mutex mutex;
  static std::mt19937_64 rng{std::random_device{}()};
  std::lock_guard lock(mutex);
  std::ostringstream out;
  out << std::hex;
  for (int i = 0; i < 2; ++i) {
    const auto v = rng();
    for (int shift = 60; shift >= 0; shift -= 4) out << ((v >> shift) & 0xF);
  }
  return out.str();
}

json component_data(const App& app, const Engine& engine, const ComponentSpec& c) {
  const auto& index = *app.index;
  std::optional<DimensionId> dim;
  if (!c.dimensions.empty()) dim = resolve_dimension(index, c.dimensions.front());
  switch (c.kind) {
    case ComponentKind::map: {
      ClusterOptions opts;
      opts.zoom = c.zoom;
      const auto clusters = cluster(engine, opts);
      return {{"zoom", c.zoom}, {"clusters", wire::to_json(clusters)}};
    }
    case ComponentKind::donut:
    case ComponentKind::bar:
      return wire::to_json(engine.group_reduce(*dim), index);
    case ComponentKind::row:
    case ComponentKind::row_xscroll:
      if (c.k > 0) return wire::to_json(engine.top_k(*dim, c.k), index);
      return wire::to_json(engine.group_reduce(*dim), index);
    case ComponentKind::sunburst:
      return wire::to_json(engine.hierarchy_rollup(*dim));
    case ComponentKind::line_zoom_focus:
      return wire::to_json(engine.histogram(*dim, c.binning.value_or(Binning::automatic())), index);
    case ComponentKind::word_cloud: {
      const auto terms = term_counts(engine, *dim, c.k > 0 ? c.k : kDefaultCloudTerms);
      return wire::to_json(terms);
    }
    case ComponentKind::table: {
      TableQuery q;
      q.limit = c.page_size > 0 ? c.page_size : 10;
      return wire::to_json(engine.record_page(q), index.dataset());
    }
  }
  return nullptr;
}

}  // namespace

std::shared_ptr<const App> make_app(AppConfig config, Dataset dataset) {
  auto diagnostics = validate_config(config, dataset.schema(), &dataset);
  if (has_errors(diagnostics)) {
    std::string msg = "config '" + config.name + "' has errors:";
    for (const auto& d : diagnostics) {
      if (d.severity == Severity::error) msg += " [" + d.rule + " @ " + d.location + "] " + d.message + ";";
    }
    throw Error(ErrorCode::InvalidConfig, msg);
  }
  auto index = IndexSet::build(std::make_shared<const Dataset>(std::move(dataset)), config.dimensions);
  return std::make_shared<const App>(App{std::move(config), index, Engine(index), std::move(diagnostics)});
}

std::shared_ptr<const App> load_app(const std::filesystem::path& config_path) {
  AppConfig config = load_config(config_path);
  Dataset dataset = load_dataset(config.dataset.path, config.dataset.format, config.schema_hints());
  return make_app(std::move(config), std::move(dataset));
}

json state_payload(const App& app, const Engine& engine) {
  json filters = json::object();
  const auto& index = *app.index;
  for (DimensionId d = 0; d < index.dimension_count(); ++d) {
    const auto& spec = engine.filter(d);
    if (!std::holds_alternative<filter::None>(spec)) filters[index.dimension(d).name] = wire::to_json(spec);
  }
  json components = json::array();
  for (const auto& c : app.config.components) {
    components.push_back({{"id", c.id},
                          {"kind", to_string(c.kind)},
                          {"dimensions", c.dimensions},
                          {"data", component_data(app, engine, c)}});
  }
  return {{"counter", wire::to_json(engine.visible_count())},
          {"filters", std::move(filters)},
          {"components", std::move(components)}};
}

SessionStore::SessionStore(std::chrono::seconds ttl, Clock clock) : ttl_(ttl), clock_(std::move(clock)) {}

std::shared_ptr<SessionStore::Session> SessionStore::create(std::shared_ptr<const App> app) {
  const auto now = clock_();
  auto session = std::make_shared<Session>(new_session_id(), std::move(app), now);
  std::lock_guard lock(mutex_);
  sweep(now);
  sessions_.emplace(session->id, session);
  return session;
}

std::pair<std::shared_ptr<SessionStore::Session>, SessionStore::Status> SessionStore::find(const std::string& id) {
  const auto now = clock_();
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) {
    return {nullptr, expired_.contains(id) ? Status::expired : Status::missing};
  }
  if (now - it->second->last_touch > ttl_) {
    expired_.insert(id);
    sessions_.erase(it);
    return {nullptr, Status::expired};
  }
  it->second->last_touch = now;
  return {it->second, Status::ok};
}

std::size_t SessionStore::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

void SessionStore::sweep(std::chrono::steady_clock::time_point now) {
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    if (now - it->second->last_touch > ttl_) {
      expired_.insert(it->first);
      it = sessions_.erase(it);
    } else {
      ++it;
    }
  }
}

Api::Api(std::vector<std::shared_ptr<const App>> apps, std::chrono::seconds ttl, SessionStore::Clock clock)
    : sessions_(ttl, std::move(clock)) {
  for (auto& app : apps) {
    const std::string name = app->config.name;
    apps_.emplace(name, std::move(app));
  }
}

HttpResponse Api::handle(const HttpRequest& request) {
  const auto parts = split_path(request.path);
  try {
    if (parts.size() == 1 && parts[0] == "apps") {
      if (request.method != "GET") return error_response(405, "MethodNotAllowed", "use GET");
      json list = json::array();
      for (const auto& [name, app] : apps_) list.push_back({{"name", name}, {"title", app->config.title}});
      return json_response(200, list);
    }
    if (parts.size() == 3 && parts[0] == "apps" && parts[2] == "sessions") {
      if (request.method != "POST") return error_response(405, "MethodNotAllowed", "use POST");
      return create_session(parts[1]);
    }
    if (parts.size() >= 2 && parts[0] == "sessions") return session_route(request, parts);
    return error_response(404, "NotFound", "no route for " + request.path);
  } catch (const Error& e) {
    return error_response(status_for(e.code()), to_string(e.code()), e.what());
  } catch (const json::exception& e) {
    return error_response(400, "MalformedBody", e.what());
  }
}

HttpResponse Api::create_session(const std::string& name) {
  auto it = apps_.find(name);
  if (it == apps_.end()) return error_response(404, "UnknownApp", "no app named '" + name + "'");
  auto session = sessions_.create(it->second);
  std::shared_lock lock(session->mutex);
  return json_response(201, {{"session", session->id},
                             {"config", wire::config_summary(it->second->config, *it->second->index)},
                             {"state", state_payload(*session->app, session->engine)}});
}

HttpResponse Api::session_route(const HttpRequest& req, const std::vector<std::string>& parts) {
  auto [session, status] = sessions_.find(parts[1]);
  if (status == SessionStore::Status::missing) return error_response(404, "UnknownSession", "no session " + parts[1]);
  if (status == SessionStore::Status::expired) {
    return error_response(410, "SessionExpired", "session " + parts[1] + " expired; create a new one");
  }
  const App& app = *session->app;
  const std::string resource = parts.size() >= 3 ? parts[2] : "";

  if (resource == "filters") {
    std::unique_lock lock(session->mutex);
    if (parts.size() == 3) {
      if (req.method != "DELETE") return error_response(405, "MethodNotAllowed", "use DELETE");
      session->engine.clear_all();
      return json_response(200, state_payload(app, session->engine));
    }
    if (parts.size() == 4) {
      const DimensionId dim = resolve_dimension(*app.index, parts[3]);
      if (req.method == "PUT") {
        const auto spec = wire::filter_from_json(json::parse(req.body));
        session->engine.set_filter(dim, spec);
      } else if (req.method == "DELETE") {
        session->engine.clear_filter(dim);
      } else {
        return error_response(405, "MethodNotAllowed", "use PUT or DELETE");
      }
      return json_response(200, state_payload(app, session->engine));
    }
    return error_response(404, "NotFound", "no route for " + req.path);
  }

  if (req.method != "GET" || parts.size() != 3) return error_response(404, "NotFound", "no route for " + req.path);
  std::shared_lock lock(session->mutex);
  const Engine& engine = session->engine;

  if (resource == "state") return json_response(200, state_payload(app, engine));
  if (resource == "table") {
    TableQuery q;
    q.offset = query_size(req, "offset", 0);
    q.limit = query_size(req, "limit", 10);
    if (auto it = req.query.find("sort"); it != req.query.end() && !it->second.empty()) q.sort_column = it->second;
    if (auto it = req.query.find("dir"); it != req.query.end()) {
      if (it->second == "desc") {
        q.ascending = false;
      } else if (!it->second.empty() && it->second != "asc") {
        throw Error(ErrorCode::InvalidQuery, "dir must be asc or desc");
      }
    }
    if (auto it = req.query.find("search"); it != req.query.end()) q.search = it->second;
    return json_response(200, wire::to_json(engine.record_page(q), app.index->dataset()));
  }
  if (resource == "clusters") {
    ClusterOptions opts;
    opts.zoom = static_cast<int>(query_size(req, "zoom", 0));
    if (auto it = req.query.find("bbox"); it != req.query.end() && !it->second.empty()) {
      opts.bbox = parse_bbox(it->second);
    }
    const auto clusters = cluster(engine, opts);
    return json_response(200, {{"zoom", opts.zoom}, {"clusters", wire::to_json(clusters)}});
  }
  if (resource == "terms") {
    const auto terms = term_counts(engine, query_size(req, "k", kDefaultCloudTerms));
    return json_response(200, wire::to_json(terms));
  }
  if (resource == "export.csv") {
    HttpResponse r;
    r.content_type = "text/csv";
    r.body = engine.export_csv();
    r.headers.emplace_back("Content-Disposition", "attachment; filename=\"" + app.config.name + ".csv\"");
    return r;
  }
  return error_response(404, "NotFound", "no route for " + req.path);
}

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(Api& api, std::optional<std::filesystem::path> static_dir) : impl_(std::make_unique<Impl>()) {
  if (static_dir) impl_->server.set_mount_point("/", static_dir->string());
  auto handler = [&api](const httplib::Request& req, httplib::Response& res) {
    HttpRequest r;
    r.method = req.method;
    r.path = req.path;
    for (const auto& [k, v] : req.params) r.query[k] = v;
    r.body = req.body;
    HttpResponse out = api.handle(r);
    res.status = out.status;
    for (const auto& [k, v] : out.headers) res.set_header(k, v);
    res.set_content(out.body, out.content_type);
  };
  const std::string api_routes = R"((/apps.*|/sessions/.*))";
  impl_->server.Get(api_routes, handler);
  impl_->server.Post(api_routes, handler);
  impl_->server.Put(api_routes, handler);
  impl_->server.Delete(api_routes, handler);
}

HttpServer::~HttpServer() = default;

bool HttpServer::listen(const std::string& host, int port) { return impl_->server.listen(host, port); }
int HttpServer::bind_to_any_port(const std::string& host) { return impl_->server.bind_to_any_port(host); }
bool HttpServer::listen_after_bind() { return impl_->server.listen_after_bind(); }
void HttpServer::stop() { impl_->server.stop(); }
void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace idwmap
