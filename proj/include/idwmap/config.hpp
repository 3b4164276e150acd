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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idwmap/filter.hpp"
#include "idwmap/ingest.hpp"
#include "idwmap/types.hpp"

namespace idwmap {

enum class ComponentKind {
  map,
  donut,
  bar,
  row,
  row_xscroll,
  sunburst,
  line_zoom_focus,
  word_cloud,
  table,
};

std::string_view to_string(ComponentKind kind);
std::optional<ComponentKind> parse_component_kind(std::string_view name);

struct ComponentSpec {
  std::string id;
  ComponentKind kind = ComponentKind::bar;
  std::string title;
  std::vector<std::string> dimensions;
  bool brushing = false;
  // Row charts and word clouds: how many keys to show (0 = all / default).
  std::size_t k = 0;
  std::string popup;
  std::vector<std::string> palette;
  // Collapsible section label.
  std::string group;
  std::optional<Binning> binning;
  // Map: initial zoom for the cluster payload.
  int zoom = 2;
  // Table: rows per page.
  std::size_t page_size = 10;
};

struct Basemap {
  std::string name;
  std::string url;
  std::string attribution;
};

struct MapElements {
  std::string title;
  bool legend = false;
  bool scale_bar = false;
  bool north_arrow = false;
  bool minimap = false;
  std::vector<Basemap> basemaps;
};

struct DatasetSource {
  std::filesystem::path path;
  InputFormat format = InputFormat::csv;
};

struct AppConfig {
  // URL-safe app id used by the service.
  std::string name;
  std::string title;
  std::string description;
  DatasetSource dataset;
  std::optional<std::string> lat_column;
  std::optional<std::string> lon_column;
  std::vector<ColumnSchema> columns;
  std::vector<DimensionSpec> dimensions;
  std::vector<ComponentSpec> components;
  MapElements map_elements;
  std::vector<std::string> palette;

  SchemaHints schema_hints() const;
};

// Relative dataset paths resolve against `base_dir`. Throws InvalidConfig.
AppConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});
AppConfig load_config(const std::filesystem::path& path);

}  // namespace idwmap
