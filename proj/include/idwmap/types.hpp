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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace idwmap {

enum class ColumnKind {
  categorical,
  numeric,
  temporal,
  text,
  multi_categorical,
  geo_lat,
  geo_lon,
  url,
  identifier,
};

std::string_view to_string(ColumnKind kind);
std::optional<ColumnKind> parse_column_kind(std::string_view name);

// Kinds stored as doubles (NaN marks null).
constexpr bool holds_numbers(ColumnKind kind) {
  return kind == ColumnKind::numeric || kind == ColumnKind::temporal ||
         kind == ColumnKind::geo_lat || kind == ColumnKind::geo_lon;
}

// Kinds the table search looks into.
constexpr bool is_searchable(ColumnKind kind) {
  return kind == ColumnKind::categorical || kind == ColumnKind::text ||
         kind == ColumnKind::multi_categorical || kind == ColumnKind::url ||
         kind == ColumnKind::identifier;
}

struct ColumnSchema {
  std::string name;
  ColumnKind kind = ColumnKind::text;
  bool nullable = true;
  // Separator for multi_categorical cells.
  char delimiter = ',';

  bool operator==(const ColumnSchema&) const = default;
};

struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;

  auto operator<=>(const GeoPoint&) const = default;
};

using StringList = std::vector<std::string>;

using CellValue =
    std::variant<std::monostate, double, std::string, StringList, GeoPoint>;

inline bool is_null(const CellValue& v) {
  return std::holds_alternative<std::monostate>(v);
}

// Shortest representation that parses back to the same double.
std::string format_number(double value);

// Strict decimal parse; the whole (trimmed) input must be consumed and the
// result finite.
std::optional<double> parse_number(std::string_view text);

std::string_view trim(std::string_view s);

std::string to_lower_ascii(std::string_view s);

// Renders a cell the way it is written to CSV (lists re-joined).
std::string cell_to_text(const CellValue& value, char delimiter = ',');

}  // namespace idwmap
