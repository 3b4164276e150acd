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

#include "idwmap/dataset.hpp"

#include <cmath>
#include <limits>
#include <unordered_set>

#include "idwmap/error.hpp"

namespace idwmap {

Column Column::from_numbers(std::vector<double> values) {
  Column c;
  c.storage_ = Storage::numbers;
  c.numbers_ = std::move(values);
  return c;
}

Column Column::from_strings(std::vector<std::optional<std::string>> values) {
  Column c;
  c.storage_ = Storage::strings;
  c.strings_.reserve(values.size());
  c.present_.reserve(values.size());
  for (auto& v : values) {
    c.present_.push_back(v.has_value() ? 1 : 0);
    c.strings_.push_back(v ? std::move(*v) : std::string());
  }
  return c;
}

Column Column::from_lists(std::vector<StringList> values) {
  Column c;
  c.storage_ = Storage::lists;
  c.lists_ = std::move(values);
  return c;
}

std::size_t Column::size() const {
  switch (storage_) {
    case Storage::numbers: return numbers_.size();
    case Storage::strings: return strings_.size();
    case Storage::lists: return lists_.size();
  }
  return 0;
}

bool Column::is_null(std::size_t row) const {
  switch (storage_) {
    case Storage::numbers: return std::isnan(numbers_[row]);
    case Storage::strings: return present_[row] == 0;
    case Storage::lists: return lists_[row].empty();
  }
  return true;
}

CellValue Column::cell(std::size_t row) const {
  if (is_null(row)) return std::monostate{};
  switch (storage_) {
    case Storage::numbers: return numbers_[row];
    case Storage::strings: return strings_[row];
    case Storage::lists: return lists_[row];
  }
  return std::monostate{};
}

bool operator==(const Column& a, const Column& b) {
  if (a.storage_ != b.storage_ || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool an = a.is_null(i);
    if (an != b.is_null(i)) return false;
    if (an) continue;
    switch (a.storage_) {
      case Column::Storage::numbers:
        if (a.numbers_[i] != b.numbers_[i]) return false;
        break;
      case Column::Storage::strings:
        if (a.strings_[i] != b.strings_[i]) return false;
        break;
      case Column::Storage::lists:
        if (a.lists_[i] != b.lists_[i]) return false;
        break;
    }
  }
  return true;
}

Column::Storage storage_for(ColumnKind kind) {
  if (holds_numbers(kind)) return Column::Storage::numbers;
  if (kind == ColumnKind::multi_categorical) return Column::Storage::lists;
  return Column::Storage::strings;
}

Dataset::Dataset(std::vector<ColumnSchema> schema, std::vector<Column> columns)
    : schema_(std::move(schema)), columns_(std::move(columns)) {
  if (schema_.size() != columns_.size()) {
    throw Error(ErrorCode::MalformedInput,
                "schema has " + std::to_string(schema_.size()) +
                    " columns but " + std::to_string(columns_.size()) +
                    " arrays were supplied");
  }
  std::unordered_set<std::string> names;
  for (std::size_t c = 0; c < schema_.size(); ++c) {
    const auto& s = schema_[c];
    if (!names.insert(s.name).second) {
      throw Error(ErrorCode::DuplicateName, "column '" + s.name + "'");
    }
    if (columns_[c].storage() != storage_for(s.kind)) {
      throw Error(ErrorCode::IncompatibleColumnKind,
                  "column '" + s.name + "' storage does not match kind " +
                      std::string(to_string(s.kind)));
    }
  }
  record_count_ = columns_.empty() ? 0 : columns_.front().size();
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (columns_[c].size() != record_count_) {
      throw Error(ErrorCode::MalformedInput,
                  "column '" + schema_[c].name + "' has " +
                      std::to_string(columns_[c].size()) + " entries, expected " +
                      std::to_string(record_count_));
    }
    const auto kind = schema_[c].kind;
    if (kind != ColumnKind::geo_lat && kind != ColumnKind::geo_lon) continue;
    const double bound = kind == ColumnKind::geo_lat ? 90.0 : 180.0;
    for (std::size_t r = 0; r < record_count_; ++r) {
      const double v = columns_[c].number(r);
      if (!std::isnan(v) && (v < -bound || v > bound)) {
        throw Error(ErrorCode::LatLonOutOfRange,
                    "column '" + schema_[c].name + "' record " +
                        std::to_string(r) + " value " + format_number(v));
      }
    }
  }
}

std::optional<std::size_t> Dataset::find_column(std::string_view name) const {
  for (std::size_t c = 0; c < schema_.size(); ++c) {
    if (schema_[c].name == name) return c;
  }
  return std::nullopt;
}

std::size_t Dataset::column_index(std::string_view name) const {
  if (auto c = find_column(name)) return *c;
  throw Error(ErrorCode::MissingColumn, "no column named '" + std::string(name) + "'");
}

}  // namespace idwmap
