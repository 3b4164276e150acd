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

#include "idwmap/validate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "idwmap/index.hpp"

namespace idwmap {

namespace {

constexpr std::uint32_t kCategorical =
    dimension_bit(DimensionKind::categorical) | dimension_bit(DimensionKind::multi_value);

constexpr std::array<ComponentRule, 9> kMatrix{{
    {ComponentKind::map, "marker map", "point location", dimension_bit(DimensionKind::spatial), 1, 1, false, false},
    {ComponentKind::bar, "bar chart", "categorical", kCategorical, 1, 1, true, false},
    {ComponentKind::line_zoom_focus, "line chart (zoom and focus pair)", "continuous",
     dimension_bit(DimensionKind::scalar_ordered), 1, 1, true, false},
    {ComponentKind::donut, "donut chart", "categorical", kCategorical, 1, 1, false, true},
    {ComponentKind::row, "row chart", "categorical", kCategorical, 1, 1, true, false},
    {ComponentKind::row_xscroll, "row chart with x-axis scroll", "categorical", kCategorical, 1, 1, false, false},
    {ComponentKind::sunburst, "sunburst chart", "hierarchical categorical",
     dimension_bit(DimensionKind::hierarchy), 1, 1, false, true},
    {ComponentKind::word_cloud, "word cloud", "textual", dimension_bit(DimensionKind::text_term), 1, 1, false, false},
    {ComponentKind::table, "data table", "tabular", 0, 0, 0, false, false},
}};

bool in_band(double hue, double lo, double hi) { return hue >= lo && hue <= hi; }

std::size_t distinct_values(const Dataset& data, const DimensionSpec& dim) {
  if (dim.columns.empty()) return 0;
  auto col = data.find_column(dim.columns.front());
  if (!col) return 0;
  const Column& column = data.column(*col);
  std::unordered_set<std::string> seen;
  for (std::size_t r = 0; r < data.record_count(); ++r) {
    if (column.is_null(r)) continue;
    switch (column.storage()) {
      case Column::Storage::numbers: seen.insert(format_number(column.number(r))); break;
      case Column::Storage::strings: seen.insert(column.string(r)); break;
      case Column::Storage::lists:
        for (const auto& v : column.list(r)) seen.insert(v);
        break;
    }
  }
  return seen.size();
}

class Collector {
 public:
  void error(std::string rule, std::string location, std::string message) {
    out_.push_back({Severity::error, std::move(rule), std::move(message), std::move(location)});
  }
  void warning(std::string rule, std::string location, std::string message) {
    out_.push_back({Severity::warning, std::move(rule), std::move(message), std::move(location)});
  }
  std::vector<Diagnostic> take() { return std::move(out_); }

 private:
  std::vector<Diagnostic> out_;
};

void check_palette(Collector& diag, std::span<const std::string> palette, const std::string& location) {
  for (const auto& c : palette) {
    if (!parse_hex_color(c)) diag.warning("invalid_color", location, "'" + c + "' is not a #rgb/#rrggbb colour");
  }
  if (mixes_red_and_green(palette)) {
    diag.warning("redgreen_palette", location,
                 "palette mixes red and green hues, which colour-blind readers cannot tell apart");
  }
}

}  // namespace

std::string_view to_string(Severity severity) {
  return severity == Severity::error ? "error" : "warning";
}

std::span<const ComponentRule> compatibility_matrix() { return kMatrix; }

const ComponentRule& rule_for(ComponentKind kind) {
  for (const auto& r : kMatrix) {
    if (r.kind == kind) return r;
  }
  return kMatrix.back();
}

std::optional<Rgb> parse_hex_color(std::string_view text) {
  text = trim(text);
  if (text.empty() || text.front() != '#') return std::nullopt;
  text.remove_prefix(1);
  auto hex = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  int v[6] = {};
  if (text.size() == 3) {
    for (int i = 0; i < 3; ++i) {
      const int h = hex(text[static_cast<std::size_t>(i)]);
      if (h < 0) return std::nullopt;
      v[2 * i] = v[2 * i + 1] = h;
    }
  } else if (text.size() == 6) {
    for (int i = 0; i < 6; ++i) {
      v[i] = hex(text[static_cast<std::size_t>(i)]);
      if (v[i] < 0) return std::nullopt;
    }
  } else {
    return std::nullopt;
  }
  return Rgb{static_cast<std::uint8_t>(v[0] * 16 + v[1]), static_cast<std::uint8_t>(v[2] * 16 + v[3]),
             static_cast<std::uint8_t>(v[4] * 16 + v[5])};
}

std::optional<double> hue_degrees(const Rgb& color) {
  const double r = color.r / 255.0;
  const double g = color.g / 255.0;
  const double b = color.b / 255.0;
  const double mx = std::max({r, g, b});
  const double mn = std::min({r, g, b});
  const double chroma = mx - mn;
  if (chroma == 0.0) return std::nullopt;
  double h = 0.0;
  if (mx == r) {
    h = std::fmod((g - b) / chroma, 6.0);
  } else if (mx == g) {
    h = (b - r) / chroma + 2.0;
  } else {
    h = (r - g) / chroma + 4.0;
  }
  h *= 60.0;
  if (h < 0.0) h += 360.0;
  return h;
}

bool mixes_red_and_green(std::span<const std::string> palette) {
  bool red = false;
  bool green = false;
  for (const auto& c : palette) {
    auto rgb = parse_hex_color(c);
    if (!rgb) continue;
    auto hue = hue_degrees(*rgb);
    if (!hue) continue;
    if (in_band(*hue, 0.0, 20.0) || in_band(*hue, 340.0, 360.0)) red = true;
    if (in_band(*hue, 90.0, 150.0)) green = true;
  }
  return red && green;
}

std::vector<Diagnostic> validate_config(const AppConfig& config, std::span<const ColumnSchema> schema,
                                        const Dataset* data) {
  Collector diag;

  auto column_kind = [&](const std::string& name) -> std::optional<ColumnKind> {
    for (const auto& c : schema) {
      if (c.name == name) return c.kind;
    }
    return std::nullopt;
  };

  if (config.dimensions.size() > kMaxDimensions) {
    diag.error("too_many_dimensions", "dimensions",
               std::to_string(config.dimensions.size()) + " dimensions, at most 64 are supported");
  }
  std::unordered_map<std::string, const DimensionSpec*> dims;
  for (const auto& d : config.dimensions) {
    if (!dims.emplace(d.name, &d).second) {
      diag.error("duplicate_dimension", d.name, "dimension name used more than once");
    }
    for (const auto& c : d.columns) {
      auto kind = column_kind(c);
      if (!kind) {
        diag.error("missing_column", d.name, "column '" + c + "' is not in the dataset");
      } else if (!column_fits(d.kind, *kind)) {
        diag.error("incompatible_column_kind", d.name,
                   "a " + std::string(to_string(d.kind)) + " dimension cannot use " +
                       std::string(to_string(*kind)) + " column '" + c + "'");
      }
    }
    const std::size_t n = d.columns.size();
    const bool arity_ok = d.kind == DimensionKind::spatial ? n == 2
                          : (d.kind == DimensionKind::hierarchy || d.kind == DimensionKind::text_term)
                              ? n >= 1
                              : n == 1;
    if (!arity_ok) {
      diag.error("dimension_arity", d.name,
                 std::to_string(n) + " columns bound to a " + std::string(to_string(d.kind)) + " dimension");
    }
  }

  std::size_t maps = 0;
  std::size_t tables = 0;
  std::set<std::string> ids;
  for (const auto& c : config.components) {
    const auto& rule = rule_for(c.kind);
    if (c.kind == ComponentKind::map) ++maps;
    if (c.kind == ComponentKind::table) ++tables;
    if (!ids.insert(c.id).second) diag.error("duplicate_component", c.id, "component id used more than once");

    if (c.dimensions.size() < rule.min_dimensions || c.dimensions.size() > rule.max_dimensions) {
      diag.error("component_arity", c.id,
                 std::string(rule.label) + " binds " + std::to_string(rule.min_dimensions) +
                     (rule.max_dimensions != rule.min_dimensions ? "-" + std::to_string(rule.max_dimensions) : "") +
                     " dimension(s), got " + std::to_string(c.dimensions.size()));
    }
    for (const auto& name : c.dimensions) {
      auto it = dims.find(name);
      if (it == dims.end()) {
        diag.error("unknown_dimension", c.id, "dimension '" + name + "' is not declared");
        continue;
      }
      const auto kind = it->second->kind;
      if ((rule.dimension_kinds & dimension_bit(kind)) == 0) {
        diag.error("chart_data_mismatch", c.id,
                   std::string(rule.label) + " shows " + std::string(rule.data_type) +
                       " data but dimension '" + name + "' is " + std::string(to_string(kind)));
      }
      if (c.brushing && data && rule.brushing) {
        const std::size_t distinct = distinct_values(*data, *it->second);
        if (distinct < kMinBrushingDistinct) {
          diag.warning("brushing_low_span", c.id,
                       "brushing over only " + std::to_string(distinct) + " distinct values of '" + name +
                           "'; clicking is enough");
        }
      }
    }
    if (c.brushing && !rule.brushing) {
      diag.warning("brushing_unsupported", c.id, std::string(rule.label) + " does not support brushing");
    }
    check_palette(diag, c.palette, c.id);
  }
  check_palette(diag, config.palette, "palette");

  if (maps != 1) diag.error("map_count", "components", "expected exactly one map component, found " + std::to_string(maps));
  if (tables != 1) {
    diag.error("table_count", "components", "expected exactly one table component, found " + std::to_string(tables));
  }

  const auto& me = config.map_elements;
  if (me.title.empty()) diag.warning("missing_map_element", "map_elements.title", "map has no title");
  if (!me.legend) diag.warning("missing_map_element", "map_elements.legend", "map has no legend");
  if (!me.scale_bar) diag.warning("missing_map_element", "map_elements.scale_bar", "map has no scale bar");
  if (!me.north_arrow) diag.warning("missing_map_element", "map_elements.north_arrow", "map has no north arrow");

  return diag.take();
}

bool has_errors(std::span<const Diagnostic> diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::error; });
}

}  // namespace idwmap
