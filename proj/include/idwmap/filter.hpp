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
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace idwmap {

using DimensionId = std::uint32_t;

inline constexpr std::size_t kMaxDimensions = 64;

enum class DimensionKind {
  scalar_ordered,
  categorical,
  multi_value,
  spatial,
  hierarchy,
  text_term,
};

std::string_view to_string(DimensionKind kind);
std::optional<DimensionKind> parse_dimension_kind(std::string_view name);

struct DimensionSpec {
  std::string name;
  DimensionKind kind = DimensionKind::categorical;
  // spatial: {lat, lon}; hierarchy: outermost level first; text_term: any
  // number of text columns; every other kind: exactly one column.
  std::vector<std::string> columns;
};

namespace filter {

struct None {
  bool operator==(const None&) const = default;
};

// Categorical: exact key match. Multi-value: non-empty intersection.
struct ValueSet {
  std::set<std::string> values;
  bool operator==(const ValueSet&) const = default;
};

// Half-open [lo, hi).
struct Range {
  double lo = 0.0;
  double hi = 0.0;
  bool operator==(const Range&) const = default;
};

// Inclusive on every edge; boxes crossing the antimeridian are rejected.
struct BBox {
  double min_lat = -90.0;
  double min_lon = -180.0;
  double max_lat = 90.0;
  double max_lon = 180.0;
  bool operator==(const BBox&) const = default;
};

struct Term {
  std::string term;
  bool operator==(const Term&) const = default;
};

struct PathPrefix {
  std::vector<std::string> path;
  bool operator==(const PathPrefix&) const = default;
};

}  // namespace filter

using FilterSpec = std::variant<filter::None, filter::ValueSet, filter::Range,
                                filter::BBox, filter::Term, filter::PathPrefix>;

std::string_view filter_type_name(const FilterSpec& spec);

// Throws IllegalFilterKind when the variant does not fit the dimension kind
// and InvalidFilter when its parameters are malformed (lo > hi, inverted box,
// non-finite bounds).
void check_filter(DimensionKind kind, const FilterSpec& spec);

void check_bbox(const filter::BBox& box);

struct Reducer {
  // Empty means count.
  std::optional<std::string> sum_column;

  static Reducer count() { return {}; }
  static Reducer sum(std::string column) { return Reducer{std::move(column)}; }
  bool is_count() const { return !sum_column.has_value(); }
  bool operator==(const Reducer&) const = default;
};

struct NumericBin {
  double lo = 0.0;
  double hi = 0.0;
  auto operator<=>(const NumericBin&) const = default;
};

using BinKey = std::variant<std::string, NumericBin>;

struct Bin {
  BinKey key;
  double value = 0.0;
  bool operator==(const Bin&) const = default;
};

struct GroupResult {
  DimensionId dimension = 0;
  // The dimension whose own filter was ignored (always `dimension`).
  DimensionId exclusion = 0;
  std::vector<Bin> bins;
  bool operator==(const GroupResult&) const = default;
};

struct Binning {
  enum class Mode { automatic, width, count, distinct };
  Mode mode = Mode::automatic;
  double width = 1.0;
  std::size_t bins = 20;

  static Binning automatic() { return {}; }
  static Binning by_width(double w) { return {Mode::width, w, 0}; }
  static Binning by_count(std::size_t n) { return {Mode::count, 0.0, n}; }
  static Binning distinct() { return {Mode::distinct, 0.0, 0}; }
};

struct ChangeSummary {
  std::size_t records_toggled = 0;
};

struct VisibleCount {
  std::size_t selected = 0;
  std::size_t total = 0;
  bool operator==(const VisibleCount&) const = default;
};

// Descending value, then ascending byte-wise key.
bool bin_order(const Bin& a, const Bin& b);

}  // namespace idwmap
