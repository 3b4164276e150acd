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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idwmap/types.hpp"

namespace idwmap {

// One typed column. Numeric kinds are stored as doubles with NaN as null,
// multi_categorical as string lists (empty list is null), everything else as
// strings with a presence flag.
class Column {
 public:
  enum class Storage { numbers, strings, lists };

  static Column from_numbers(std::vector<double> values);
  static Column from_strings(std::vector<std::optional<std::string>> values);
  static Column from_lists(std::vector<StringList> values);

  Storage storage() const { return storage_; }
  std::size_t size() const;
  bool is_null(std::size_t row) const;

  double number(std::size_t row) const { return numbers_[row]; }
  const std::string& string(std::size_t row) const { return strings_[row]; }
  const StringList& list(std::size_t row) const { return lists_[row]; }
  std::span<const double> numbers() const { return numbers_; }

  CellValue cell(std::size_t row) const;

  friend bool operator==(const Column& a, const Column& b);

 private:
  Storage storage_ = Storage::strings;
  std::vector<double> numbers_;
  std::vector<std::string> strings_;
  std::vector<std::uint8_t> present_;
  std::vector<StringList> lists_;
};

Column::Storage storage_for(ColumnKind kind);

// Immutable columnar table. Record ordinals 0..record_count()-1 are stable.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::vector<ColumnSchema> schema, std::vector<Column> columns);

  const std::vector<ColumnSchema>& schema() const { return schema_; }
  std::size_t column_count() const { return schema_.size(); }
  std::size_t record_count() const { return record_count_; }

  const Column& column(std::size_t index) const { return columns_[index]; }
  std::optional<std::size_t> find_column(std::string_view name) const;
  // Throws MissingColumn.
  std::size_t column_index(std::string_view name) const;

  CellValue cell(std::size_t row, std::size_t col) const {
    return columns_[col].cell(row);
  }

  friend bool operator==(const Dataset& a, const Dataset& b) {
    return a.schema_ == b.schema_ && a.columns_ == b.columns_ &&
           a.record_count_ == b.record_count_;
  }

 private:
  std::vector<ColumnSchema> schema_;
  std::vector<Column> columns_;
  std::size_t record_count_ = 0;
};

}  // namespace idwmap
