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

#include "idwmap/config.hpp"

#include <array>
#include <utility>

#include <json.hpp>

#include "idwmap/error.hpp"

namespace idwmap {

namespace {

using nlohmann::json;

constexpr std::array<std::pair<ComponentKind, std::string_view>, 9> kComponentNames{{
    {ComponentKind::map, "map"},
    {ComponentKind::donut, "donut"},
    {ComponentKind::bar, "bar"},
    {ComponentKind::row, "row"},
    {ComponentKind::row_xscroll, "row_xscroll"},
    {ComponentKind::sunburst, "sunburst"},
    {ComponentKind::line_zoom_focus, "line_zoom_focus"},
    {ComponentKind::word_cloud, "word_cloud"},
    {ComponentKind::table, "table"},
}};

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::InvalidConfig, what);
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key) || j[key].is_null()) return fallback;
  try {
    return j[key].get<T>();
  } catch (const json::exception&) {
    invalid(std::string("field '") + key + "' has the wrong type");
  }
}

std::vector<std::string> string_list(const json& j, const char* key) {
  return get_or<std::vector<std::string>>(j, key, {});
}

Binning parse_binning(const json& j) {
  if (j.is_string() && j.get<std::string>() == "distinct") return Binning::distinct();
  if (j.is_string() && j.get<std::string>() == "auto") return Binning::automatic();
  if (j.is_object() && j.contains("width")) return Binning::by_width(j["width"].get<double>());
  if (j.is_object() && j.contains("bins")) return Binning::by_count(j["bins"].get<std::size_t>());
  invalid("binning must be \"auto\", \"distinct\", {\"width\": w} or {\"bins\": n}");
}

ComponentSpec parse_component(const json& j, std::size_t index) {
  if (!j.is_object()) invalid("components[" + std::to_string(index) + "] is not an object");
  ComponentSpec c;
  const auto kind = get_or<std::string>(j, "kind", "");
  auto parsed = parse_component_kind(kind);
  if (!parsed) invalid("components[" + std::to_string(index) + "]: unknown kind '" + kind + "'");
  c.kind = *parsed;
  c.id = get_or<std::string>(j, "id", std::string(to_string(c.kind)) + "_" + std::to_string(index));
  c.title = get_or<std::string>(j, "title", "");
  c.dimensions = string_list(j, "dimensions");
  if (j.contains("dimension")) c.dimensions.insert(c.dimensions.begin(), j["dimension"].get<std::string>());
  c.brushing = get_or<bool>(j, "brushing", false);
  c.k = get_or<std::size_t>(j, "k", 0);
  c.popup = get_or<std::string>(j, "popup", "");
  c.palette = string_list(j, "palette");
  c.group = get_or<std::string>(j, "group", "");
  if (j.contains("binning")) c.binning = parse_binning(j["binning"]);
  c.zoom = get_or<int>(j, "zoom", 2);
  c.page_size = get_or<std::size_t>(j, "page_size", 10);
  return c;
}

}  // namespace

std::string_view to_string(ComponentKind kind) {
  for (const auto& [k, name] : kComponentNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<ComponentKind> parse_component_kind(std::string_view name) {
  for (const auto& [k, n] : kComponentNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

SchemaHints AppConfig::schema_hints() const {
  SchemaHints hints;
  hints.columns = columns;
  if (lat_column) hints.lat_names = {*lat_column};
  if (lon_column) hints.lon_names = {*lon_column};
  return hints;
}

namespace {

AppConfig parse_config_impl(std::string_view text, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    invalid(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) invalid("config must be a JSON object");

  AppConfig cfg;
  cfg.name = get_or<std::string>(j, "name", "");
  if (cfg.name.empty()) invalid("'name' is required");
  cfg.title = get_or<std::string>(j, "title", "");
  cfg.description = get_or<std::string>(j, "description", "");

  if (!j.contains("dataset") || !j["dataset"].is_object()) invalid("'dataset' object is required");
  const auto& ds = j["dataset"];
  const auto path = get_or<std::string>(ds, "path", "");
  if (path.empty()) invalid("'dataset.path' is required");
  cfg.dataset.path = std::filesystem::path(path);
  if (cfg.dataset.path.is_relative() && !base_dir.empty()) cfg.dataset.path = base_dir / cfg.dataset.path;
  const auto format = get_or<std::string>(ds, "format", "csv");
  auto parsed_format = parse_input_format(format);
  if (!parsed_format) invalid("unknown dataset format '" + format + "'");
  cfg.dataset.format = *parsed_format;

  if (j.contains("lat_column")) cfg.lat_column = j["lat_column"].get<std::string>();
  if (j.contains("lon_column")) cfg.lon_column = j["lon_column"].get<std::string>();

  for (const auto& c : get_or<json>(j, "columns", json::array())) {
    ColumnSchema s;
    s.name = get_or<std::string>(c, "name", "");
    if (s.name.empty()) invalid("column entry without a name");
    const auto kind = get_or<std::string>(c, "kind", "text");
    auto k = parse_column_kind(kind);
    if (!k) invalid("column '" + s.name + "': unknown kind '" + kind + "'");
    s.kind = *k;
    s.nullable = get_or<bool>(c, "nullable", true);
    const auto delim = get_or<std::string>(c, "delimiter", ",");
    if (delim.size() != 1) invalid("column '" + s.name + "': delimiter must be one character");
    s.delimiter = delim[0];
    cfg.columns.push_back(std::move(s));
  }

  for (const auto& d : get_or<json>(j, "dimensions", json::array())) {
    DimensionSpec spec;
    spec.name = get_or<std::string>(d, "name", "");
    if (spec.name.empty()) invalid("dimension entry without a name");
    const auto kind = get_or<std::string>(d, "kind", "");
    auto k = parse_dimension_kind(kind);
    if (!k) invalid("dimension '" + spec.name + "': unknown kind '" + kind + "'");
    spec.kind = *k;
    spec.columns = string_list(d, "columns");
    if (d.contains("column")) spec.columns.insert(spec.columns.begin(), d["column"].get<std::string>());
    cfg.dimensions.push_back(std::move(spec));
  }

  const auto components = get_or<json>(j, "components", json::array());
  for (std::size_t i = 0; i < components.size(); ++i) {
    cfg.components.push_back(parse_component(components[i], i));
  }

  const auto me = get_or<json>(j, "map_elements", json::object());
  cfg.map_elements.title = get_or<std::string>(me, "title", "");
  cfg.map_elements.legend = get_or<bool>(me, "legend", false);
  cfg.map_elements.scale_bar = get_or<bool>(me, "scale_bar", false);
  cfg.map_elements.north_arrow = get_or<bool>(me, "north_arrow", false);
  cfg.map_elements.minimap = get_or<bool>(me, "minimap", false);
  for (const auto& b : get_or<json>(me, "basemaps", json::array())) {
    cfg.map_elements.basemaps.push_back({get_or<std::string>(b, "name", ""),
                                         get_or<std::string>(b, "url", ""),
                                         get_or<std::string>(b, "attribution", "")});
  }
  cfg.palette = string_list(j, "palette");
  return cfg;
}

}  // namespace

AppConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  try {
    return parse_config_impl(text, base_dir);
  } catch (const nlohmann::json::exception& e) {
    invalid(std::string("malformed config: ") + e.what());
  }
}

AppConfig load_config(const std::filesystem::path& path) {
  return parse_config(read_file(path), path.parent_path());
}

}  // namespace idwmap
