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
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "idwmap/dataset.hpp"
#include "idwmap/filter.hpp"
#include "idwmap/index.hpp"

namespace idwmap {

struct TableQuery {
  std::size_t offset = 0;
  std::size_t limit = 10;
  std::optional<std::string> sort_column;
  bool ascending = true;
  std::string search;
};

struct TableRow {
  std::uint32_t ordinal = 0;
  std::vector<CellValue> cells;
  bool operator==(const TableRow&) const = default;
};

struct TablePage {
  std::vector<TableRow> rows;
  // Visible rows that survive the search.
  std::size_t matched = 0;
  // Visible rows before the search.
  std::size_t visible = 0;
  bool operator==(const TablePage&) const = default;
};

struct HierarchyNode {
  std::vector<std::string> path;
  double value = 0.0;
  // Descending value, ties by ascending label; zero-valued nodes omitted.
  std::vector<HierarchyNode> children;
  bool operator==(const HierarchyNode&) const = default;
};

// The cross-filtering core.
//
// Every record carries a 64-bit word whose bit d is set iff the record fails
// dimension d's active filter; a record is visible iff its word is zero.
// Changing one filter toggles bit d only on records whose pass/fail status
// changes, and the per-slot counts of every keyed dimension are adjusted for
// exactly those records. Group queries on dimension d consider records with
// (mask & ~bit d) == 0, i.e. a view ignores its own filter.
//
// Queries are const and may run concurrently; mutations need exclusive access.
class Engine {
 public:
  explicit Engine(std::shared_ptr<const IndexSet> index);

  // Throws TooManyDimensions, MissingColumn, IncompatibleColumnKind.
  static Engine build(Dataset dataset, const std::vector<DimensionSpec>& specs);

  const IndexSet& index() const { return *index_; }
  std::shared_ptr<const IndexSet> shared_index() const { return index_; }
  const Dataset& dataset() const { return index_->dataset(); }

  // Throws UnknownDimension, IllegalFilterKind, InvalidFilter.
  ChangeSummary set_filter(DimensionId dim, FilterSpec spec);
  ChangeSummary clear_filter(DimensionId dim);
  ChangeSummary clear_all();

  const FilterSpec& filter(DimensionId dim) const;
  std::span<const std::uint64_t> mask() const { return mask_; }
  bool visible(std::size_t record) const { return mask_[record] == 0; }
  bool passes_except(std::size_t record, DimensionId dim) const {
    return (mask_[record] & ~(std::uint64_t{1} << dim)) == 0;
  }

  VisibleCount visible_count() const { return {visible_, index_->record_count()}; }

  // Scalar dimensions group into the default histogram; hierarchies group by
  // their outermost level; categorical and multi-value keys are all listed,
  // zero-valued ones included. Throws UnknownDimension, IllegalReducer,
  // NotGroupable (spatial).
  GroupResult group_reduce(DimensionId dim, const Reducer& reducer = Reducer::count()) const;
  double group_all(const Reducer& reducer = Reducer::count()) const;
  GroupResult top_k(DimensionId dim, std::size_t k,
                    const Reducer& reducer = Reducer::count()) const;
  // Throws NotScalarDimension, NonPositiveWidth.
  GroupResult histogram(DimensionId dim, const Binning& binning,
                        const Reducer& reducer = Reducer::count()) const;
  // Throws NotHierarchyDimension.
  HierarchyNode hierarchy_rollup(DimensionId dim) const;

  // Throws UnknownSortColumn, InvalidQuery.
  TablePage record_page(const TableQuery& query) const;

  void export_csv(std::ostream& out) const;
  std::string export_csv() const;

  // Count of records passing all filters except `dim`'s own, per slot of a
  // keyed dimension.
  std::span<const std::int64_t> slot_counts(DimensionId dim) const;

 private:
  struct DimState {
    FilterSpec spec;
    // scalar: passing interval of sorted positions plus null handling
    std::size_t lo = 0;
    std::size_t hi = 0;
    bool nulls_pass = true;
    // keyed: accepted slots (sorted) unless everything passes
    bool accept_all = true;
    std::vector<std::uint32_t> accepted;
    std::vector<std::uint8_t> accepted_flag;
    // keyed: maintained counts
    std::vector<std::int64_t> counts;
  };

  void toggle(std::uint32_t record, DimensionId dim);
  std::size_t change_scalar(DimensionId dim, const FilterSpec& spec);
  std::size_t change_keyed(DimensionId dim, const FilterSpec& spec);
  std::size_t change_spatial(DimensionId dim, const FilterSpec& spec);
  const ColumnSchema& sum_column(const Reducer& reducer, std::size_t& col) const;

  std::shared_ptr<const IndexSet> index_;
  std::vector<std::uint64_t> mask_;
  std::vector<DimState> states_;
  std::vector<DimensionId> keyed_dims_;
  // Per dimension id; null for non-keyed dimensions.
  std::vector<const KeyedIndex*> keyed_;
  std::size_t visible_ = 0;
};

}  // namespace idwmap
