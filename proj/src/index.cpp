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

#include "idwmap/index.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "idwmap/error.hpp"
#include "idwmap/text.hpp"

namespace idwmap {

namespace {

// Builds CSR + postings from per-record raw key lists, renumbering keys into
// sorted order.
KeyedIndex build_flat(std::size_t records,
                      const std::vector<std::vector<std::string>>& raw) {
  std::unordered_map<std::string, std::uint32_t> ids;
  std::vector<std::string> keys;
  std::vector<std::vector<std::uint32_t>> temp(records);
  for (std::size_t r = 0; r < records; ++r) {
    for (const auto& k : raw[r]) {
      auto [it, inserted] = ids.try_emplace(k, static_cast<std::uint32_t>(keys.size()));
      if (inserted) keys.push_back(k);
      temp[r].push_back(it->second);
    }
  }
  std::vector<std::uint32_t> by_key(keys.size());
  std::iota(by_key.begin(), by_key.end(), 0u);
  std::sort(by_key.begin(), by_key.end(),
            [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
  std::vector<std::uint32_t> remap(keys.size());
  KeyedIndex out;
  out.keys.reserve(keys.size());
  for (std::uint32_t i = 0; i < by_key.size(); ++i) {
    remap[by_key[i]] = i;
    out.keys.push_back(keys[by_key[i]]);
  }
  out.postings.resize(out.keys.size());
  out.offsets.reserve(records + 1);
  out.offsets.push_back(0);
  for (std::size_t r = 0; r < records; ++r) {
    auto& list = temp[r];
    for (auto& s : list) s = remap[s];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (auto s : list) {
      out.slots.push_back(s);
      out.postings[s].push_back(static_cast<std::uint32_t>(r));
    }
    out.offsets.push_back(static_cast<std::uint32_t>(out.slots.size()));
  }
  return out;
}

std::string key_text(const Column& column, std::size_t row) {
  if (column.storage() == Column::Storage::numbers) {
    return format_number(column.number(row));
  }
  return column.string(row);
}

ScalarIndex build_scalar(const Dataset& ds, std::size_t col) {
  const auto values = ds.column(col).numbers();
  ScalarIndex idx;
  idx.column = col;
  std::vector<std::uint32_t> non_null;
  std::vector<std::uint32_t> nulls;
  for (std::uint32_t r = 0; r < values.size(); ++r) {
    if (std::isnan(values[r])) {
      nulls.push_back(r);
    } else {
      non_null.push_back(r);
      if (values[r] != std::floor(values[r])) idx.integer_valued = false;
    }
  }
  std::stable_sort(non_null.begin(), non_null.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return values[a] < values[b]; });
  idx.sorted.reserve(non_null.size());
  for (auto r : non_null) idx.sorted.push_back(values[r]);
  idx.order = std::move(non_null);
  idx.order.insert(idx.order.end(), nulls.begin(), nulls.end());
  return idx;
}

KeyedIndex build_categorical(const Dataset& ds, std::size_t col) {
  const auto& column = ds.column(col);
  std::vector<std::vector<std::string>> raw(ds.record_count());
  for (std::size_t r = 0; r < raw.size(); ++r) {
    if (!column.is_null(r)) raw[r].push_back(key_text(column, r));
  }
  KeyedIndex out = build_flat(raw.size(), raw);
  out.single.assign(raw.size(), KeyedIndex::kNoSlot);
  for (std::size_t r = 0; r < raw.size(); ++r) {
    if (out.offsets[r + 1] > out.offsets[r]) out.single[r] = out.slots[out.offsets[r]];
  }
  return out;
}

KeyedIndex build_multi(const Dataset& ds, std::size_t col) {
  const auto& column = ds.column(col);
  std::vector<std::vector<std::string>> raw(ds.record_count());
  for (std::size_t r = 0; r < raw.size(); ++r) raw[r] = column.list(r);
  return build_flat(raw.size(), raw);
}

KeyedIndex build_terms(const Dataset& ds, const std::vector<std::size_t>& cols) {
  std::vector<std::vector<std::string>> raw(ds.record_count());
  for (std::size_t r = 0; r < raw.size(); ++r) {
    for (auto c : cols) {
      const auto& column = ds.column(c);
      if (column.is_null(r)) continue;
      auto append = [&](std::string_view text) {
        auto tokens = tokenize(text);
        raw[r].insert(raw[r].end(), std::make_move_iterator(tokens.begin()),
                      std::make_move_iterator(tokens.end()));
      };
      switch (column.storage()) {
        case Column::Storage::strings: append(column.string(r)); break;
        case Column::Storage::lists:
          for (const auto& item : column.list(r)) append(item);
          break;
        case Column::Storage::numbers: break;
      }
    }
  }
  return build_flat(raw.size(), raw);
}

KeyedIndex build_hierarchy(const Dataset& ds, const std::vector<std::size_t>& cols) {
  KeyedIndex out;
  const std::size_t records = ds.record_count();
  std::vector<std::vector<std::uint32_t>> paths(records);
  for (std::size_t r = 0; r < records; ++r) {
    std::uint32_t parent = KeyedIndex::kNoParent;
    for (std::size_t level = 0; level < cols.size(); ++level) {
      const auto& column = ds.column(cols[level]);
      if (column.is_null(r)) break;
      std::string label = key_text(column, r);
      auto key = std::make_pair(parent, label);
      auto it = out.child_lookup.find(key);
      std::uint32_t node;
      if (it == out.child_lookup.end()) {
        node = static_cast<std::uint32_t>(out.keys.size());
        out.child_lookup.emplace(std::move(key), node);
        out.keys.push_back(std::move(label));
        out.parent.push_back(parent);
        out.level.push_back(static_cast<std::uint32_t>(level));
        out.children.emplace_back();
        if (parent == KeyedIndex::kNoParent) {
          out.roots.push_back(node);
        } else {
          out.children[parent].push_back(node);
        }
      } else {
        node = it->second;
      }
      paths[r].push_back(node);
      parent = node;
    }
  }
  out.postings.resize(out.keys.size());
  out.offsets.reserve(records + 1);
  out.offsets.push_back(0);
  for (std::size_t r = 0; r < records; ++r) {
    auto list = paths[r];
    std::sort(list.begin(), list.end());
    for (auto s : list) {
      out.slots.push_back(s);
      out.postings[s].push_back(static_cast<std::uint32_t>(r));
    }
    out.offsets.push_back(static_cast<std::uint32_t>(out.slots.size()));
  }
  return out;
}

SpatialIndex build_spatial(const Dataset& ds, std::size_t lat_col, std::size_t lon_col) {
  SpatialIndex idx;
  const auto lat = ds.column(lat_col).numbers();
  const auto lon = ds.column(lon_col).numbers();
  idx.points.resize(ds.record_count());
  idx.present.resize(ds.record_count());
  for (std::size_t r = 0; r < ds.record_count(); ++r) {
    if (std::isnan(lat[r]) || std::isnan(lon[r])) continue;
    idx.points[r] = {lat[r], lon[r]};
    idx.present[r] = 1;
  }
  return idx;
}

}  // namespace

std::optional<std::uint32_t> KeyedIndex::find(std::string_view key) const {
  auto it = std::lower_bound(keys.begin(), keys.end(), key,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == keys.end() || *it != key) return std::nullopt;
  return static_cast<std::uint32_t>(it - keys.begin());
}

std::optional<std::uint32_t> KeyedIndex::find_path(std::span<const std::string> path) const {
  std::uint32_t node = kNoParent;
  for (const auto& label : path) {
    auto it = child_lookup.find({node, label});
    if (it == child_lookup.end()) return std::nullopt;
    node = it->second;
  }
  if (node == kNoParent) return std::nullopt;
  return node;
}

std::vector<std::string> KeyedIndex::path_of(std::uint32_t node) const {
  std::vector<std::string> out;
  for (auto n = node; n != kNoParent; n = parent[n]) out.push_back(keys[n]);
  std::reverse(out.begin(), out.end());
  return out;
}

bool column_fits(DimensionKind dim, ColumnKind column) {
  switch (dim) {
    case DimensionKind::scalar_ordered:
      return holds_numbers(column);
    case DimensionKind::categorical:
      return column == ColumnKind::categorical || column == ColumnKind::text ||
             column == ColumnKind::identifier || column == ColumnKind::url ||
             column == ColumnKind::numeric || column == ColumnKind::temporal;
    case DimensionKind::multi_value:
      return column == ColumnKind::multi_categorical;
    case DimensionKind::spatial:
      return column == ColumnKind::geo_lat || column == ColumnKind::geo_lon;
    case DimensionKind::hierarchy:
      return column == ColumnKind::categorical || column == ColumnKind::text ||
             column == ColumnKind::identifier;
    case DimensionKind::text_term:
      return column == ColumnKind::text || column == ColumnKind::categorical ||
             column == ColumnKind::multi_categorical;
  }
  return false;
}

std::shared_ptr<const IndexSet> IndexSet::build(std::shared_ptr<const Dataset> dataset,
                                                const std::vector<DimensionSpec>& specs) {
  if (specs.size() > kMaxDimensions) {
    throw Error(ErrorCode::TooManyDimensions,
                std::to_string(specs.size()) + " dimensions requested, at most 64");
  }
  auto out = std::shared_ptr<IndexSet>(new IndexSet());
  out->dataset_ = std::move(dataset);
  out->specs_ = specs;
  const Dataset& ds = *out->dataset_;
  std::unordered_set<std::string> names;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& spec = specs[i];
    if (!names.insert(spec.name).second) {
      throw Error(ErrorCode::DuplicateName, "dimension '" + spec.name + "'");
    }
    Dimension dim;
    dim.id = static_cast<DimensionId>(i);
    dim.name = spec.name;
    dim.kind = spec.kind;
    for (const auto& c : spec.columns) {
      auto idx = ds.find_column(c);
      if (!idx) {
        throw Error(ErrorCode::MissingColumn,
                    "dimension '" + spec.name + "' references missing column '" + c + "'");
      }
      if (!column_fits(spec.kind, ds.schema()[*idx].kind)) {
        throw Error(ErrorCode::IncompatibleColumnKind,
                    "dimension '" + spec.name + "' (" + std::string(to_string(spec.kind)) +
                        ") cannot use column '" + c + "' of kind " +
                        std::string(to_string(ds.schema()[*idx].kind)));
      }
      dim.columns.push_back(*idx);
    }
    auto arity_error = [&](const std::string& expected) {
      return Error(ErrorCode::IncompatibleColumnKind,
                   "dimension '" + spec.name + "' needs " + expected);
    };
    switch (spec.kind) {
      case DimensionKind::scalar_ordered:
        if (dim.columns.size() != 1) throw arity_error("exactly one column");
        dim.index = build_scalar(ds, dim.columns[0]);
        break;
      case DimensionKind::categorical:
        if (dim.columns.size() != 1) throw arity_error("exactly one column");
        dim.index = build_categorical(ds, dim.columns[0]);
        break;
      case DimensionKind::multi_value:
        if (dim.columns.size() != 1) throw arity_error("exactly one column");
        dim.index = build_multi(ds, dim.columns[0]);
        break;
      case DimensionKind::spatial:
        if (dim.columns.size() != 2 ||
            ds.schema()[dim.columns[0]].kind != ColumnKind::geo_lat ||
            ds.schema()[dim.columns[1]].kind != ColumnKind::geo_lon) {
          throw arity_error("a geo_lat column followed by a geo_lon column");
        }
        dim.index = build_spatial(ds, dim.columns[0], dim.columns[1]);
        break;
      case DimensionKind::hierarchy:
        if (dim.columns.empty()) throw arity_error("at least one level column");
        dim.index = build_hierarchy(ds, dim.columns);
        break;
      case DimensionKind::text_term:
        if (dim.columns.empty()) throw arity_error("at least one text column");
        dim.index = build_terms(ds, dim.columns);
        break;
    }
    out->dimensions_.push_back(std::move(dim));
  }
  return out;
}

const Dimension& IndexSet::dimension(DimensionId id) const {
  if (id >= dimensions_.size()) {
    throw Error(ErrorCode::UnknownDimension, "dimension id " + std::to_string(id));
  }
  return dimensions_[id];
}

std::optional<DimensionId> IndexSet::find_dimension(std::string_view name) const {
  for (const auto& d : dimensions_) {
    if (d.name == name) return d.id;
  }
  return std::nullopt;
}

}  // namespace idwmap
