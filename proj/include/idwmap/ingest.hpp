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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idwmap/dataset.hpp"

namespace idwmap {

enum class InputFormat { csv, json_records, geojson_points };

std::optional<InputFormat> parse_input_format(std::string_view name);
std::string_view to_string(InputFormat format);

struct SchemaHints {
  // Explicit schemas by column name; everything else is inferred.
  std::vector<ColumnSchema> columns;
  // Header names (case-insensitive) that become geo_lat / geo_lon.
  std::vector<std::string> lat_names{"lat", "latitude"};
  std::vector<std::string> lon_names{"lon", "lng", "long", "longitude"};

  const ColumnSchema* find(std::string_view name) const;
};

// Header plus raw cell text, the common intermediate for every input format.
struct RawTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  // Source line (CSV) or 1-based record number (JSON) per row.
  std::vector<std::size_t> lines;
};

// numeric iff every non-empty cell parses as a number; lat/lon-named columns
// become geo kinds; anything else is text. Explicit hints win.
// Throws EmptySample when there are no rows.
std::vector<ColumnSchema> infer_schema(const RawTable& sample, const SchemaHints& hints = {});

// Throws MalformedInput, TypeCoercionFailure, LatLonOutOfRange,
// NonPointGeometry.
Dataset parse_tabular(std::string_view bytes, InputFormat format, const SchemaHints& hints = {});

Dataset load_dataset(const std::filesystem::path& path, InputFormat format,
                     const SchemaHints& hints = {});

// Splits a multi-value cell: entries trimmed, empty entries dropped.
StringList split_multi(std::string_view cell, char delimiter);

std::string read_file(const std::filesystem::path& path);

}  // namespace idwmap
