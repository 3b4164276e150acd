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

#include "idwmap/wire.hpp"

#include "idwmap/error.hpp"

namespace idwmap::wire {

namespace {

double number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw Error(ErrorCode::InvalidFilter, std::string("filter needs numeric '") + key + "'");
  }
  return j[key].get<double>();
}

}  // namespace

json to_json(const FilterSpec& spec) {
  json j;
  j["type"] = std::string(filter_type_name(spec));
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, filter::ValueSet>) {
          j["values"] = f.values;
        } else if constexpr (std::is_same_v<T, filter::Range>) {
          j["lo"] = f.lo;
          j["hi"] = f.hi;
        } else if constexpr (std::is_same_v<T, filter::BBox>) {
          j["min_lat"] = f.min_lat;
          j["min_lon"] = f.min_lon;
          j["max_lat"] = f.max_lat;
          j["max_lon"] = f.max_lon;
        } else if constexpr (std::is_same_v<T, filter::Term>) {
          j["term"] = f.term;
        } else if constexpr (std::is_same_v<T, filter::PathPrefix>) {
          j["path"] = f.path;
        }
      },
      spec);
  return j;
}

FilterSpec filter_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw Error(ErrorCode::InvalidFilter, "filter body needs a string 'type'");
  }
  const auto type = j["type"].get<std::string>();
  try {
    if (type == "none") return filter::None{};
    if (type == "value_set") {
      filter::ValueSet f;
      for (const auto& v : j.at("values")) f.values.insert(v.get<std::string>());
      return f;
    }
    if (type == "range") return filter::Range{number(j, "lo"), number(j, "hi")};
    if (type == "bbox") {
      return filter::BBox{number(j, "min_lat"), number(j, "min_lon"), number(j, "max_lat"),
                          number(j, "max_lon")};
    }
    if (type == "term") return filter::Term{j.at("term").get<std::string>()};
    if (type == "path_prefix") return filter::PathPrefix{j.at("path").get<std::vector<std::string>>()};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidFilter, std::string("malformed ") + type + " filter: " + e.what());
  }
  throw Error(ErrorCode::InvalidFilter, "unknown filter type '" + type + "'");
}

json to_json(const CellValue& value) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, GeoPoint>) {
          return json{{"lat", v.lat}, {"lon", v.lon}};
        } else {
          return v;
        }
      },
      value);
}

json to_json(const GroupResult& group, const IndexSet& index) {
  json bins = json::array();
  for (const auto& b : group.bins) {
    if (const auto* key = std::get_if<std::string>(&b.key)) {
      bins.push_back({{"key", *key}, {"value", b.value}});
    } else {
      const auto& nb = std::get<NumericBin>(b.key);
      bins.push_back({{"lo", nb.lo}, {"hi", nb.hi}, {"value", b.value}});
    }
  }
  return {{"dimension", index.dimension(group.dimension).name},
          {"exclusion", index.dimension(group.exclusion).name},
          {"bins", std::move(bins)}};
}

json to_json(const HierarchyNode& node) {
  json children = json::array();
  for (const auto& c : node.children) children.push_back(to_json(c));
  return {{"path", node.path}, {"value", node.value}, {"children", std::move(children)}};
}

json to_json(const TablePage& page, const Dataset& dataset) {
  json columns = json::array();
  for (const auto& s : dataset.schema()) columns.push_back({{"name", s.name}, {"kind", to_string(s.kind)}});
  json rows = json::array();
  for (const auto& r : page.rows) {
    json cells = json::array();
    for (const auto& c : r.cells) cells.push_back(to_json(c));
    rows.push_back({{"ordinal", r.ordinal}, {"cells", std::move(cells)}});
  }
  return {{"columns", std::move(columns)},
          {"rows", std::move(rows)},
          {"matched", page.matched},
          {"visible", page.visible}};
}

json to_json(std::span<const TermCount> terms) {
  json out = json::array();
  for (const auto& t : terms) out.push_back({{"term", t.term}, {"frequency", t.frequency}});
  return out;
}

json to_json(std::span<const Cluster> clusters) {
  json out = json::array();
  for (const auto& c : clusters) {
    json j = {{"zoom", c.zoom},
              {"cx", c.cx},
              {"cy", c.cy},
              {"count", c.count},
              {"centroid", {{"lat", c.centroid.lat}, {"lon", c.centroid.lon}}}};
    if (!c.members.empty()) j["members"] = c.members;
    out.push_back(std::move(j));
  }
  return out;
}

json to_json(const Diagnostic& d) {
  return {{"severity", to_string(d.severity)}, {"rule", d.rule}, {"message", d.message}, {"location", d.location}};
}

json to_json(const VisibleCount& counter) {
  return {{"selected", counter.selected}, {"total", counter.total}};
}

json config_summary(const AppConfig& config, const IndexSet& index) {
  json dims = json::array();
  for (DimensionId d = 0; d < index.dimension_count(); ++d) {
    const auto& dim = index.dimension(d);
    dims.push_back({{"id", d}, {"name", dim.name}, {"kind", to_string(dim.kind)},
                    {"columns", index.specs()[d].columns}});
  }
  json components = json::array();
  for (const auto& c : config.components) {
    json j = {{"id", c.id},         {"kind", to_string(c.kind)}, {"title", c.title},
              {"dimensions", c.dimensions}, {"brushing", c.brushing}, {"k", c.k},
              {"popup", c.popup},   {"palette", c.palette},      {"group", c.group}};
    components.push_back(std::move(j));
  }
  json basemaps = json::array();
  for (const auto& b : config.map_elements.basemaps) {
    basemaps.push_back({{"name", b.name}, {"url", b.url}, {"attribution", b.attribution}});
  }
  const auto& me = config.map_elements;
  return {{"name", config.name},
          {"title", config.title},
          {"description", config.description},
          {"record_count", index.record_count()},
          {"dimensions", std::move(dims)},
          {"components", std::move(components)},
          {"map_elements",
           {{"title", me.title},
            {"legend", me.legend},
            {"scale_bar", me.scale_bar},
            {"north_arrow", me.north_arrow},
            {"minimap", me.minimap},
            {"basemaps", std::move(basemaps)}}},
          {"palette", config.palette}};
}

}  // namespace idwmap::wire
