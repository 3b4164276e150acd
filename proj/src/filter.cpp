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

#include "idwmap/filter.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "idwmap/error.hpp"

namespace idwmap {

namespace {

constexpr std::array<std::pair<DimensionKind, std::string_view>, 6> kNames{{
    {DimensionKind::scalar_ordered, "scalar_ordered"},
    {DimensionKind::categorical, "categorical"},
    {DimensionKind::multi_value, "multi_value"},
    {DimensionKind::spatial, "spatial"},
    {DimensionKind::hierarchy, "hierarchy"},
    {DimensionKind::text_term, "text_term"},
}};

bool legal(DimensionKind kind, const FilterSpec& spec) {
  return std::visit(
      [kind](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, filter::None>) {
          return true;
        } else if constexpr (std::is_same_v<T, filter::ValueSet>) {
          return kind == DimensionKind::categorical ||
                 kind == DimensionKind::multi_value;
        } else if constexpr (std::is_same_v<T, filter::Range>) {
          return kind == DimensionKind::scalar_ordered;
        } else if constexpr (std::is_same_v<T, filter::BBox>) {
          return kind == DimensionKind::spatial;
        } else if constexpr (std::is_same_v<T, filter::Term>) {
          return kind == DimensionKind::text_term;
        } else {
          return kind == DimensionKind::hierarchy;
        }
      },
      spec);
}

}  // namespace

std::string_view to_string(DimensionKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<DimensionKind> parse_dimension_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::string_view filter_type_name(const FilterSpec& spec) {
  constexpr std::array<std::string_view, 6> names{
      "none", "value_set", "range", "bbox", "term", "path_prefix"};
  return names[spec.index()];
}

void check_bbox(const filter::BBox& b) {
  for (double v : {b.min_lat, b.min_lon, b.max_lat, b.max_lon}) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::InvalidBbox, "bbox bounds must be finite");
    }
  }
  if (b.min_lat > b.max_lat || b.min_lon > b.max_lon) {
    throw Error(ErrorCode::InvalidBbox,
                "bbox requires min <= max on both axes (antimeridian-crossing "
                "boxes are not supported)");
  }
  if (b.min_lat < -90.0 || b.max_lat > 90.0 || b.min_lon < -180.0 ||
      b.max_lon > 180.0) {
    throw Error(ErrorCode::InvalidBbox, "bbox outside [-90,90] x [-180,180]");
  }
}

void check_filter(DimensionKind kind, const FilterSpec& spec) {
  if (!legal(kind, spec)) {
    throw Error(ErrorCode::IllegalFilterKind,
                std::string(filter_type_name(spec)) + " filter on " +
                    std::string(to_string(kind)) + " dimension");
  }
  if (const auto* r = std::get_if<filter::Range>(&spec)) {
    if (std::isnan(r->lo) || std::isnan(r->hi) || r->lo > r->hi) {
      throw Error(ErrorCode::InvalidFilter, "range requires lo <= hi");
    }
  }
  if (const auto* b = std::get_if<filter::BBox>(&spec)) {
    try {
      check_bbox(*b);
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidFilter, e.what());
    }
  }
}

bool bin_order(const Bin& a, const Bin& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.key < b.key;
}

}  // namespace idwmap
