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
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "idwmap/dataset.hpp"
#include "idwmap/filter.hpp"

namespace idwmap {

// Sorted permutation over one numeric column. order[0, non_null) holds the
// non-null records by ascending value (ties by ordinal); nulls follow in
// ordinal order.
struct ScalarIndex {
  std::size_t column = 0;
  std::vector<std::uint32_t> order;
  std::vector<double> sorted;
  bool integer_valued = true;

  std::size_t non_null() const { return sorted.size(); }
};

// Records mapped to "slots": category keys, multi-values, terms, or
// hierarchy nodes. Each record's slot list is sorted and unique; posting
// lists are sorted by ordinal.
struct KeyedIndex {
  static constexpr std::uint32_t kNoParent = UINT32_MAX;

  static constexpr std::uint32_t kNoSlot = UINT32_MAX;

  std::vector<std::string> keys;
  // Categorical only: the record's single slot or kNoSlot, a flat copy of
  // the CSR below for the hot toggle path.
  std::vector<std::uint32_t> single;
  std::vector<std::uint32_t> offsets;
  std::vector<std::uint32_t> slots;
  std::vector<std::vector<std::uint32_t>> postings;

  // Hierarchy only: tree shape over slots.
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> level;
  std::vector<std::vector<std::uint32_t>> children;
  std::vector<std::uint32_t> roots;
  std::map<std::pair<std::uint32_t, std::string>, std::uint32_t> child_lookup;

  std::span<const std::uint32_t> slots_of(std::size_t record) const {
    return {slots.data() + offsets[record], offsets[record + 1] - offsets[record]};
  }
  // Flat (non-hierarchy) key lookup; keys are sorted.
  std::optional<std::uint32_t> find(std::string_view key) const;
  std::optional<std::uint32_t> find_path(std::span<const std::string> path) const;
  std::vector<std::string> path_of(std::uint32_t node) const;
};

struct SpatialIndex {
  std::vector<GeoPoint> points;
  std::vector<std::uint8_t> present;
};

struct Dimension {
  DimensionId id = 0;
  std::string name;
  DimensionKind kind = DimensionKind::categorical;
  std::vector<std::size_t> columns;
  std::variant<ScalarIndex, KeyedIndex, SpatialIndex> index;

  const ScalarIndex& scalar() const { return std::get<ScalarIndex>(index); }
  const KeyedIndex& keyed() const { return std::get<KeyedIndex>(index); }
  const SpatialIndex& spatial() const { return std::get<SpatialIndex>(index); }
  bool is_keyed() const { return std::holds_alternative<KeyedIndex>(index); }
};

// Whether a column kind may feed a dimension kind.
bool column_fits(DimensionKind dim, ColumnKind column);

// Dataset plus every dimension index. Immutable once built and shared by
// all engines (sessions) over the same app.
class IndexSet {
 public:
  // Throws TooManyDimensions, MissingColumn, IncompatibleColumnKind,
  // DuplicateName.
  static std::shared_ptr<const IndexSet> build(std::shared_ptr<const Dataset> dataset,
                                               const std::vector<DimensionSpec>& specs);

  const Dataset& dataset() const { return *dataset_; }
  std::shared_ptr<const Dataset> shared_dataset() const { return dataset_; }
  std::size_t record_count() const { return dataset_->record_count(); }
  std::size_t dimension_count() const { return dimensions_.size(); }
  // Throws UnknownDimension.
  const Dimension& dimension(DimensionId id) const;
  std::optional<DimensionId> find_dimension(std::string_view name) const;
  const std::vector<DimensionSpec>& specs() const { return specs_; }

 private:
  std::shared_ptr<const Dataset> dataset_;
  std::vector<DimensionSpec> specs_;
  std::vector<Dimension> dimensions_;
};

}  // namespace idwmap
