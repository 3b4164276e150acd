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

#include "idwmap/ingest.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "idwmap/csv.hpp"
#include "idwmap/error.hpp"

namespace idwmap {

namespace {

using nlohmann::json;

bool name_in(std::string_view name, const std::vector<std::string>& names) {
  const auto lower = to_lower_ascii(trim(name));
  for (const auto& n : names) {
    if (to_lower_ascii(n) == lower) return true;
  }
  return false;
}

ColumnSchema default_schema(const std::string& name, const SchemaHints& hints) {
  if (const auto* h = hints.find(name)) return *h;
  ColumnSchema s;
  s.name = name;
  if (name_in(name, hints.lat_names)) {
    s.kind = ColumnKind::geo_lat;
  } else if (name_in(name, hints.lon_names)) {
    s.kind = ColumnKind::geo_lon;
  } else {
    s.kind = ColumnKind::text;
  }
  return s;
}

std::string json_cell(const json& v) {
  if (v.is_null()) return {};
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return format_number(v.get<double>());
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out.push_back(',');
      out += json_cell(v[i]);
    }
    return out;
  }
  return v.dump();
}

// Appends a JSON object's members as a row, growing the header on first
// sight of a key.
void append_object(RawTable& table, std::unordered_map<std::string, std::size_t>& cols,
                   const json& object, std::size_t line,
                   std::vector<std::pair<std::string, std::string>> extra = {}) {
  std::vector<std::pair<std::string, std::string>> cells = std::move(extra);
  if (object.is_object()) {
    for (auto it = object.begin(); it != object.end(); ++it) {
      cells.emplace_back(it.key(), json_cell(it.value()));
    }
  } else if (!object.is_null()) {
    throw Error(ErrorCode::MalformedInput, "record " + std::to_string(line) + ": not an object");
  }
  std::vector<std::string> row(table.header.size());
  for (auto& [key, text] : cells) {
    auto [it, inserted] = cols.try_emplace(key, table.header.size());
    if (inserted) {
      table.header.push_back(key);
      for (auto& r : table.rows) r.emplace_back();
      row.emplace_back();
    }
    row[it->second] = std::move(text);
  }
  table.rows.push_back(std::move(row));
  table.lines.push_back(line);
}

json parse_json(std::string_view bytes) {
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
}

RawTable raw_from_json_records(std::string_view bytes) {
  const json doc = parse_json(bytes);
  if (!doc.is_array()) throw Error(ErrorCode::MalformedInput, "expected a JSON array of records");
  RawTable table;
  std::unordered_map<std::string, std::size_t> cols;
  for (std::size_t i = 0; i < doc.size(); ++i) append_object(table, cols, doc[i], i + 1);
  return table;
}

RawTable raw_from_geojson(std::string_view bytes, const SchemaHints& hints) {
  const json doc = parse_json(bytes);
  if (!doc.is_object() || doc.value("type", "") != "FeatureCollection" ||
      !doc.contains("features") || !doc["features"].is_array()) {
    throw Error(ErrorCode::MalformedInput, "expected a GeoJSON FeatureCollection");
  }
  const std::string lat_name = hints.lat_names.empty() ? "lat" : hints.lat_names.front();
  const std::string lon_name = hints.lon_names.empty() ? "lon" : hints.lon_names.front();
  RawTable table;
  table.header = {lat_name, lon_name};
  std::unordered_map<std::string, std::size_t> cols{{lat_name, 0}, {lon_name, 1}};
  const auto& features = doc["features"];
  for (std::size_t i = 0; i < features.size(); ++i) {
    const auto& f = features[i];
    if (!f.is_object()) {
      throw Error(ErrorCode::MalformedInput, "feature " + std::to_string(i) + ": not an object");
    }
    std::string lat_text;
    std::string lon_text;
    if (f.contains("geometry") && !f["geometry"].is_null()) {
      const auto& g = f["geometry"];
      if (g.value("type", "") != "Point") {
        throw Error(ErrorCode::NonPointGeometry,
                    "feature " + std::to_string(i) + " has geometry type '" +
                        g.value("type", "?") + "'");
      }
      const auto& c = g.value("coordinates", json::array());
      if (!c.is_array() || c.size() < 2 || !c[0].is_number() || !c[1].is_number()) {
        throw Error(ErrorCode::MalformedInput,
                    "feature " + std::to_string(i) + ": bad Point coordinates");
      }
      lon_text = format_number(c[0].get<double>());
      lat_text = format_number(c[1].get<double>());
    }
    const json props = f.contains("properties") ? f["properties"] : json();
    append_object(table, cols, props, i + 1, {{lat_name, lat_text}, {lon_name, lon_text}});
  }
  return table;
}

RawTable raw_from_csv(std::string_view bytes) {
  csv::Table t = csv::read(bytes);
  return RawTable{std::move(t.header), std::move(t.rows), std::move(t.lines)};
}

Column coerce(const ColumnSchema& schema, const RawTable& table, std::size_t col) {
  const std::size_t n = table.rows.size();
  auto where = [&](std::size_t r) {
    return "column '" + schema.name + "' line " + std::to_string(table.lines[r]);
  };
  auto missing = [&](std::size_t r) {
    if (!schema.nullable) {
      throw Error(ErrorCode::TypeCoercionFailure, where(r) + ": empty value in non-nullable column");
    }
  };
  switch (storage_for(schema.kind)) {
    case Column::Storage::numbers: {
      std::vector<double> values(n, std::nan(""));
      const bool lat = schema.kind == ColumnKind::geo_lat;
      const bool lon = schema.kind == ColumnKind::geo_lon;
      for (std::size_t r = 0; r < n; ++r) {
        const auto text = trim(table.rows[r][col]);
        if (text.empty()) {
          missing(r);
          continue;
        }
        auto v = parse_number(text);
        if (!v) {
          throw Error(ErrorCode::TypeCoercionFailure,
                      where(r) + ": '" + std::string(text) + "' is not a number");
        }
        if ((lat && std::abs(*v) > 90.0) || (lon && std::abs(*v) > 180.0)) {
          throw Error(ErrorCode::LatLonOutOfRange,
                      where(r) + ": " + std::string(text) + " out of range");
        }
        values[r] = *v;
      }
      return Column::from_numbers(std::move(values));
    }
    case Column::Storage::lists: {
      std::vector<StringList> values(n);
      for (std::size_t r = 0; r < n; ++r) {
        values[r] = split_multi(table.rows[r][col], schema.delimiter);
        if (values[r].empty()) missing(r);
      }
      return Column::from_lists(std::move(values));
    }
    case Column::Storage::strings: {
      std::vector<std::optional<std::string>> values(n);
      for (std::size_t r = 0; r < n; ++r) {
        const auto& text = table.rows[r][col];
        if (text.empty()) {
          missing(r);
        } else {
          values[r] = text;
        }
      }
      return Column::from_strings(std::move(values));
    }
  }
  return Column::from_strings({});
}

Dataset build_dataset(const RawTable& table, const SchemaHints& hints) {
  std::vector<ColumnSchema> schema;
  if (table.rows.empty()) {
    for (const auto& name : table.header) schema.push_back(default_schema(name, hints));
  } else {
    schema = infer_schema(table, hints);
  }
  std::vector<Column> columns;
  columns.reserve(schema.size());
  for (std::size_t c = 0; c < schema.size(); ++c) columns.push_back(coerce(schema[c], table, c));
  return Dataset(std::move(schema), std::move(columns));
}

}  // namespace

std::optional<InputFormat> parse_input_format(std::string_view name) {
  if (name == "csv") return InputFormat::csv;
  if (name == "json_records" || name == "json") return InputFormat::json_records;
  if (name == "geojson_points" || name == "geojson") return InputFormat::geojson_points;
  return std::nullopt;
}

std::string_view to_string(InputFormat format) {
  switch (format) {
    case InputFormat::csv: return "csv";
    case InputFormat::json_records: return "json_records";
    case InputFormat::geojson_points: return "geojson_points";
  }
  return "csv";
}

const ColumnSchema* SchemaHints::find(std::string_view name) const {
  for (const auto& c : columns) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

StringList split_multi(std::string_view cell, char delimiter) {
  StringList out;
  std::size_t start = 0;
  while (start <= cell.size()) {
    auto end = cell.find(delimiter, start);
    if (end == std::string_view::npos) end = cell.size();
    auto item = trim(cell.substr(start, end - start));
    if (!item.empty()) out.emplace_back(item);
    start = end + 1;
  }
  return out;
}

std::vector<ColumnSchema> infer_schema(const RawTable& sample, const SchemaHints& hints) {
  if (sample.rows.empty()) throw Error(ErrorCode::EmptySample, "schema inference needs at least one row");
  std::vector<ColumnSchema> out;
  for (std::size_t c = 0; c < sample.header.size(); ++c) {
    ColumnSchema s = default_schema(sample.header[c], hints);
    if (!hints.find(s.name) && s.kind == ColumnKind::text) {
      bool any = false;
      bool numeric = true;
      for (const auto& row : sample.rows) {
        const auto text = trim(row[c]);
        if (text.empty()) continue;
        any = true;
        if (!parse_number(text)) {
          numeric = false;
          break;
        }
      }
      if (any && numeric) s.kind = ColumnKind::numeric;
    }
    out.push_back(std::move(s));
  }
  return out;
}

Dataset parse_tabular(std::string_view bytes, InputFormat format, const SchemaHints& hints) {
  switch (format) {
    case InputFormat::csv: return build_dataset(raw_from_csv(bytes), hints);
    case InputFormat::json_records: return build_dataset(raw_from_json_records(bytes), hints);
    case InputFormat::geojson_points: {
      // Point coordinates always land in geo columns, whatever the names.
      SchemaHints h = hints;
      const std::string lat_name = h.lat_names.empty() ? "lat" : h.lat_names.front();
      const std::string lon_name = h.lon_names.empty() ? "lon" : h.lon_names.front();
      if (!h.find(lat_name)) h.columns.push_back({lat_name, ColumnKind::geo_lat, true, ','});
      if (!h.find(lon_name)) h.columns.push_back({lon_name, ColumnKind::geo_lon, true, ','});
      return build_dataset(raw_from_geojson(bytes, h), h);
    }
  }
  return {};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Dataset load_dataset(const std::filesystem::path& path, InputFormat format,
                     const SchemaHints& hints) {
  return parse_tabular(read_file(path), format, hints);
}

}  // namespace idwmap
