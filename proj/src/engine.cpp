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

#include "idwmap/engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "idwmap/csv.hpp"
#include "idwmap/error.hpp"
#include "idwmap/geo.hpp"

namespace idwmap {

namespace {

constexpr std::size_t kMaxBins = 1'000'000;
constexpr double kAutoIntegerSpan = 1000.0;
constexpr std::size_t kAutoBinCount = 20;
// Scalar changes touching more than 1/kScanFraction of all records switch to
// an ordinal-order scan.
constexpr std::size_t kScanFraction = 16;

std::size_t interval_xor_size(std::size_t a0, std::size_t b0, std::size_t a1, std::size_t b1) {
  const std::size_t len0 = b0 > a0 ? b0 - a0 : 0;
  const std::size_t len1 = b1 > a1 ? b1 - a1 : 0;
  const std::size_t lo = std::max(a0, a1);
  const std::size_t hi = std::min(b0, b1);
  const std::size_t overlap = hi > lo ? hi - lo : 0;
  return len0 + len1 - 2 * overlap;
}

// Contiguous bins [edges[i], edges[i+1]) or, for distinct binning, one
// single-value bin per distinct value.
struct BinPlan {
  bool uniform = true;
  double anchor = 0.0;
  double width = 1.0;
  std::vector<double> edges;
  std::vector<double> distinct;

  std::size_t size() const { return uniform ? (edges.empty() ? 0 : edges.size() - 1) : distinct.size(); }

  NumericBin bin(std::size_t i) const {
    if (uniform) return {edges[i], edges[i + 1]};
    return {distinct[i], std::nextafter(distinct[i], std::numeric_limits<double>::infinity())};
  }

  // Every non-null value of the dimension falls in exactly one bin.
  std::size_t locate(double v) const {
    if (!uniform) {
      auto it = std::lower_bound(distinct.begin(), distinct.end(), v);
      return static_cast<std::size_t>(it - distinct.begin());
    }
    const std::size_t n = size();
    double raw = std::floor((v - anchor) / width);
    std::size_t i = raw <= 0.0 ? 0 : std::min(n - 1, static_cast<std::size_t>(raw));
    while (i > 0 && v < edges[i]) --i;
    while (i + 1 < n && v >= edges[i + 1]) ++i;
    return i;
  }
};

BinPlan plan_bins(const ScalarIndex& idx, const Binning& binning) {
  BinPlan plan;
  if (binning.mode == Binning::Mode::width &&
      !(binning.width > 0.0 && std::isfinite(binning.width))) {
    throw Error(ErrorCode::NonPositiveWidth, "bin width must be positive");
  }
  if (binning.mode == Binning::Mode::count && binning.bins == 0) {
    throw Error(ErrorCode::NonPositiveWidth, "bin count must be positive");
  }
  if (idx.non_null() == 0) {
    plan.uniform = binning.mode != Binning::Mode::distinct;
    return plan;
  }
  const double lo = idx.sorted.front();
  const double hi = idx.sorted.back();
  const double inf = std::numeric_limits<double>::infinity();

  Binning effective = binning;
  if (binning.mode == Binning::Mode::automatic) {
    if (idx.integer_valued && hi - lo + 1.0 <= kAutoIntegerSpan) {
      effective = Binning::by_width(1.0);
    } else {
      effective = Binning::by_count(kAutoBinCount);
    }
  }

  switch (effective.mode) {
    case Binning::Mode::distinct: {
      plan.uniform = false;
      plan.distinct = idx.sorted;
      plan.distinct.erase(std::unique(plan.distinct.begin(), plan.distinct.end()),
                          plan.distinct.end());
      return plan;
    }
    case Binning::Mode::width: {
      plan.width = effective.width;
      plan.anchor = std::floor(lo / plan.width) * plan.width;
      if (plan.anchor > lo) plan.anchor -= plan.width;
      const double span = std::floor((hi - plan.anchor) / plan.width) + 1.0;
      if (span > static_cast<double>(kMaxBins)) {
        throw Error(ErrorCode::InvalidQuery, "bin width yields too many bins");
      }
      std::size_t n = static_cast<std::size_t>(std::max(span, 1.0));
      while (plan.anchor + static_cast<double>(n) * plan.width <= hi) ++n;
      for (std::size_t i = 0; i <= n; ++i) {
        plan.edges.push_back(plan.anchor + static_cast<double>(i) * plan.width);
      }
      return plan;
    }
    case Binning::Mode::count:
    case Binning::Mode::automatic: {
      if (hi == lo) {
        plan.anchor = lo;
        plan.width = 1.0;
        plan.edges = {lo, std::nextafter(lo, inf)};
        return plan;
      }
      if (effective.bins > kMaxBins) {
        throw Error(ErrorCode::InvalidQuery, "too many bins");
      }
      const std::size_t n = effective.bins;
      plan.anchor = lo;
      plan.width = (hi - lo) / static_cast<double>(n);
      for (std::size_t i = 0; i < n; ++i) {
        plan.edges.push_back(lo + static_cast<double>(i) * plan.width);
      }
      plan.edges.push_back(std::max(lo + static_cast<double>(n) * plan.width,
                                    std::nextafter(hi, inf)));
      return plan;
    }
  }
  return plan;
}

bool accepts(const std::vector<std::uint8_t>& flags, bool accept_all,
             std::span<const std::uint32_t> slots) {
  if (accept_all) return true;
  for (auto s : slots) {
    if (flags[s]) return true;
  }
  return false;
}

std::string row_text(const Column& column, const ColumnSchema& schema, std::size_t row) {
  return cell_to_text(column.cell(row), schema.delimiter);
}

}  // namespace

Engine::Engine(std::shared_ptr<const IndexSet> index) : index_(std::move(index)) {
  const std::size_t n = index_->record_count();
  mask_.assign(n, 0);
  visible_ = n;
  states_.resize(index_->dimension_count());
  keyed_.assign(index_->dimension_count(), nullptr);
  for (DimensionId d = 0; d < index_->dimension_count(); ++d) {
    const auto& dim = index_->dimension(d);
    auto& st = states_[d];
    st.spec = filter::None{};
    if (dim.kind == DimensionKind::scalar_ordered) {
      st.lo = 0;
      st.hi = dim.scalar().non_null();
    } else if (dim.is_keyed()) {
      keyed_dims_.push_back(d);
      keyed_[d] = &dim.keyed();
      const auto& k = dim.keyed();
      st.accepted_flag.assign(k.keys.size(), 0);
      st.counts.resize(k.keys.size());
      for (std::size_t s = 0; s < k.keys.size(); ++s) {
        st.counts[s] = static_cast<std::int64_t>(k.postings[s].size());
      }
    }
  }
}

Engine Engine::build(Dataset dataset, const std::vector<DimensionSpec>& specs) {
  return Engine(IndexSet::build(std::make_shared<const Dataset>(std::move(dataset)), specs));
}

const FilterSpec& Engine::filter(DimensionId dim) const {
  index_->dimension(dim);
  return states_[dim].spec;
}

void Engine::toggle(std::uint32_t record, DimensionId dim) {
  const std::uint64_t bit = std::uint64_t{1} << dim;
  const std::uint64_t before = mask_[record];
  const std::uint64_t after = before ^ bit;
  mask_[record] = after;
  if (before == 0) --visible_;
  if (after == 0) ++visible_;

  // Dimension e's view of the record ("passes all but e") flips only when
  // no filter other than d and e rejects it.
  const std::uint64_t others = before & ~bit;
  const std::int64_t delta = (after & bit) ? -1 : 1;
  auto bump = [&](DimensionId e) {
    const auto& idx = keyed_[e];
    auto& counts = states_[e].counts;
    if (!idx->single.empty()) {
      const auto s = idx->single[record];
      if (s != KeyedIndex::kNoSlot) counts[s] += delta;
      return;
    }
    for (auto s : idx->slots_of(record)) counts[s] += delta;
  };
  if (others == 0) {
    for (DimensionId e : keyed_dims_) {
      if (e != dim) bump(e);
    }
  } else if (std::has_single_bit(others)) {
    const auto e = static_cast<DimensionId>(std::countr_zero(others));
    if (keyed_[e]) bump(e);
  }
}

ChangeSummary Engine::set_filter(DimensionId dim, FilterSpec spec) {
  const auto& dimension = index_->dimension(dim);
  check_filter(dimension.kind, spec);
  std::size_t toggled = 0;
  switch (dimension.kind) {
    case DimensionKind::scalar_ordered: toggled = change_scalar(dim, spec); break;
    case DimensionKind::spatial: toggled = change_spatial(dim, spec); break;
    default: toggled = change_keyed(dim, spec); break;
  }
  states_[dim].spec = std::move(spec);
  return {toggled};
}

ChangeSummary Engine::clear_filter(DimensionId dim) {
  return set_filter(dim, filter::None{});
}

ChangeSummary Engine::clear_all() {
  ChangeSummary total;
  for (DimensionId d = 0; d < states_.size(); ++d) {
    total.records_toggled += clear_filter(d).records_toggled;
  }
  return total;
}

std::size_t Engine::change_scalar(DimensionId dim, const FilterSpec& spec) {
  const auto& idx = index_->dimension(dim).scalar();
  auto& st = states_[dim];
  std::size_t lo = 0;
  std::size_t hi = idx.non_null();
  bool nulls_pass = true;
  if (const auto* r = std::get_if<filter::Range>(&spec)) {
    lo = static_cast<std::size_t>(
        std::lower_bound(idx.sorted.begin(), idx.sorted.end(), r->lo) - idx.sorted.begin());
    hi = static_cast<std::size_t>(
        std::lower_bound(idx.sorted.begin(), idx.sorted.end(), r->hi) - idx.sorted.begin());
    hi = std::max(hi, lo);
    nulls_pass = false;
  }

  std::size_t toggled = 0;

  const std::size_t estimate = interval_xor_size(st.lo, st.hi, lo, hi) +
                               (nulls_pass != st.nulls_pass ? idx.order.size() - idx.non_null() : 0);
  if (estimate * kScanFraction > mask_.size()) {
    // Large change: find the same records by one pass in ordinal order, which
    // keeps every per-record array access sequential.
    const auto values = index_->dataset().column(idx.column).numbers();
    const auto* range = std::get_if<filter::Range>(&spec);
    const std::uint64_t bit = std::uint64_t{1} << dim;
    for (std::uint32_t r = 0; r < mask_.size(); ++r) {
      const double v = values[r];
      const bool pass = std::isnan(v) ? nulls_pass : (!range || (v >= range->lo && v < range->hi));
      if (pass == ((mask_[r] & bit) != 0)) {
        toggle(r, dim);
        ++toggled;
      }
    }
    st.lo = lo;
    st.hi = hi;
    st.nulls_pass = nulls_pass;
    return toggled;
  }

  auto flip = [&](std::size_t from, std::size_t to) {
    for (std::size_t p = from; p < to; ++p) toggle(idx.order[p], dim);
    toggled += to - from;
  };
  // Symmetric difference of [st.lo, st.hi) and [lo, hi).
  if (st.lo >= st.hi) {
    flip(lo, hi);
  } else if (lo >= hi) {
    flip(st.lo, st.hi);
  } else if (st.hi <= lo || hi <= st.lo) {
    flip(st.lo, st.hi);
    flip(lo, hi);
  } else {
    flip(std::min(st.lo, lo), std::max(st.lo, lo));
    flip(std::min(st.hi, hi), std::max(st.hi, hi));
  }
  if (nulls_pass != st.nulls_pass) flip(idx.non_null(), idx.order.size());

  st.lo = lo;
  st.hi = hi;
  st.nulls_pass = nulls_pass;
  return toggled;
}

std::size_t Engine::change_keyed(DimensionId dim, const FilterSpec& spec) {
  const auto& idx = index_->dimension(dim).keyed();
  auto& st = states_[dim];
  bool accept_all = false;
  std::vector<std::uint32_t> accepted;
  if (std::holds_alternative<filter::None>(spec)) {
    accept_all = true;
  } else if (const auto* vs = std::get_if<filter::ValueSet>(&spec)) {
    for (const auto& v : vs->values) {
      if (auto s = idx.find(v)) accepted.push_back(*s);
    }
  } else if (const auto* t = std::get_if<filter::Term>(&spec)) {
    if (auto s = idx.find(to_lower_ascii(t->term))) accepted.push_back(*s);
  } else if (const auto* p = std::get_if<filter::PathPrefix>(&spec)) {
    if (p->path.empty()) {
      accept_all = true;
    } else if (auto s = idx.find_path(p->path)) {
      accepted.push_back(*s);
    }
  }
  std::sort(accepted.begin(), accepted.end());
  accepted.erase(std::unique(accepted.begin(), accepted.end()), accepted.end());

  std::vector<std::uint8_t> flags(idx.keys.size(), 0);
  for (auto s : accepted) flags[s] = 1;

  const std::uint64_t bit = std::uint64_t{1} << dim;
  std::size_t toggled = 0;
  auto reconcile = [&](std::uint32_t r) {
    const bool pass = accepts(flags, accept_all, idx.slots_of(r));
    const bool failing = (mask_[r] & bit) != 0;
    if (pass == failing) {
      toggle(r, dim);
      ++toggled;
    }
  };

  if (accept_all || st.accept_all) {
    if (!(accept_all && st.accept_all)) {
      for (std::uint32_t r = 0; r < mask_.size(); ++r) reconcile(r);
    }
  } else {
    std::vector<std::uint32_t> changed;
    std::set_symmetric_difference(st.accepted.begin(), st.accepted.end(), accepted.begin(),
                                  accepted.end(), std::back_inserter(changed));
    for (auto s : changed) {
      for (auto r : idx.postings[s]) reconcile(r);
    }
  }

  st.accept_all = accept_all;
  st.accepted = std::move(accepted);
  st.accepted_flag = std::move(flags);
  return toggled;
}

std::size_t Engine::change_spatial(DimensionId dim, const FilterSpec& spec) {
  const auto& idx = index_->dimension(dim).spatial();
  const auto* box = std::get_if<filter::BBox>(&spec);
  const std::uint64_t bit = std::uint64_t{1} << dim;
  std::size_t toggled = 0;
  for (std::uint32_t r = 0; r < mask_.size(); ++r) {
    bool pass = true;
    if (box) {
      pass = idx.present[r] ? bbox_pass(idx.points[r], *box) : false;
    }
    const bool failing = (mask_[r] & bit) != 0;
    if (pass == failing) {
      toggle(r, dim);
      ++toggled;
    }
  }
  return toggled;
}

std::span<const std::int64_t> Engine::slot_counts(DimensionId dim) const {
  index_->dimension(dim);
  return states_[dim].counts;
}

const ColumnSchema& Engine::sum_column(const Reducer& reducer, std::size_t& col) const {
  const auto& ds = index_->dataset();
  auto found = ds.find_column(*reducer.sum_column);
  if (!found) {
    throw Error(ErrorCode::IllegalReducer, "sum over missing column '" + *reducer.sum_column + "'");
  }
  const auto& schema = ds.schema()[*found];
  if (schema.kind != ColumnKind::numeric) {
    throw Error(ErrorCode::IllegalReducer,
                "sum over non-numeric column '" + schema.name + "'");
  }
  col = *found;
  return schema;
}

GroupResult Engine::group_reduce(DimensionId dim, const Reducer& reducer) const {
  const auto& dimension = index_->dimension(dim);
  if (dimension.kind == DimensionKind::scalar_ordered) {
    return histogram(dim, Binning::automatic(), reducer);
  }
  if (dimension.kind == DimensionKind::spatial) {
    throw Error(ErrorCode::NotGroupable,
                "spatial dimension '" + dimension.name + "' is queried through clusters");
  }
  const auto& idx = dimension.keyed();
  const bool hierarchy = dimension.kind == DimensionKind::hierarchy;

  std::vector<double> values(idx.keys.size(), 0.0);
  if (reducer.is_count()) {
    const auto& counts = states_[dim].counts;
    for (std::size_t s = 0; s < values.size(); ++s) values[s] = static_cast<double>(counts[s]);
  } else {
    std::size_t col = 0;
    sum_column(reducer, col);
    const auto nums = index_->dataset().column(col).numbers();
    // Rescan in ordinal order so sums are bit-reproducible.
    for (std::uint32_t r = 0; r < mask_.size(); ++r) {
      if (!passes_except(r, dim) || std::isnan(nums[r])) continue;
      for (auto s : idx.slots_of(r)) values[s] += nums[r];
    }
  }

  GroupResult out;
  out.dimension = dim;
  out.exclusion = dim;
  if (hierarchy) {
    for (auto root : idx.roots) out.bins.push_back({idx.keys[root], values[root]});
  } else {
    out.bins.reserve(values.size());
    for (std::size_t s = 0; s < values.size(); ++s) out.bins.push_back({idx.keys[s], values[s]});
  }
  std::sort(out.bins.begin(), out.bins.end(), bin_order);
  return out;
}

double Engine::group_all(const Reducer& reducer) const {
  if (reducer.is_count()) return static_cast<double>(visible_);
  std::size_t col = 0;
  sum_column(reducer, col);
  const auto nums = index_->dataset().column(col).numbers();
  double total = 0.0;
  for (std::size_t r = 0; r < mask_.size(); ++r) {
    if (mask_[r] == 0 && !std::isnan(nums[r])) total += nums[r];
  }
  return total;
}

GroupResult Engine::top_k(DimensionId dim, std::size_t k, const Reducer& reducer) const {
  if (k == 0) throw Error(ErrorCode::InvalidQuery, "k must be >= 1");
  GroupResult out = group_reduce(dim, reducer);
  std::stable_sort(out.bins.begin(), out.bins.end(), bin_order);
  if (out.bins.size() > k) out.bins.resize(k);
  return out;
}

GroupResult Engine::histogram(DimensionId dim, const Binning& binning,
                              const Reducer& reducer) const {
  const auto& dimension = index_->dimension(dim);
  if (dimension.kind != DimensionKind::scalar_ordered) {
    throw Error(ErrorCode::NotScalarDimension,
                "dimension '" + dimension.name + "' is " + std::string(to_string(dimension.kind)));
  }
  const auto& idx = dimension.scalar();
  const BinPlan plan = plan_bins(idx, binning);
  const std::size_t n = plan.size();
  std::vector<double> values(n, 0.0);

  const auto data = index_->dataset().column(idx.column).numbers();
  std::span<const double> weights;
  if (!reducer.is_count()) {
    std::size_t col = 0;
    sum_column(reducer, col);
    weights = index_->dataset().column(col).numbers();
  }
  const std::uint64_t keep = ~(std::uint64_t{1} << dim);
  if (n > 0) {
    for (std::size_t r = 0; r < mask_.size(); ++r) {
      if ((mask_[r] & keep) != 0) continue;
      const double v = data[r];
      if (std::isnan(v)) continue;
      const std::size_t b = plan.locate(v);
      if (weights.empty()) {
        values[b] += 1.0;
      } else if (!std::isnan(weights[r])) {
        values[b] += weights[r];
      }
    }
  }

  GroupResult out;
  out.dimension = dim;
  out.exclusion = dim;
  out.bins.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.bins.push_back({plan.bin(i), values[i]});
  return out;
}

HierarchyNode Engine::hierarchy_rollup(DimensionId dim) const {
  const auto& dimension = index_->dimension(dim);
  if (dimension.kind != DimensionKind::hierarchy) {
    throw Error(ErrorCode::NotHierarchyDimension,
                "dimension '" + dimension.name + "' is " + std::string(to_string(dimension.kind)));
  }
  const auto& idx = dimension.keyed();
  const auto& counts = states_[dim].counts;

  auto build = [&](auto&& self, std::uint32_t node, std::vector<std::string> path) -> HierarchyNode {
    HierarchyNode out;
    path.push_back(idx.keys[node]);
    out.value = static_cast<double>(counts[node]);
    for (auto child : idx.children[node]) {
      if (counts[child] > 0) out.children.push_back(self(self, child, path));
    }
    out.path = std::move(path);
    return out;
  };
  auto order = [](const HierarchyNode& a, const HierarchyNode& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.path.back() < b.path.back();
  };
  auto sort_tree = [&](auto&& self, HierarchyNode& node) -> void {
    std::sort(node.children.begin(), node.children.end(), order);
    for (auto& c : node.children) self(self, c);
  };

  HierarchyNode root;
  for (auto r : idx.roots) {
    if (counts[r] > 0) {
      root.children.push_back(build(build, r, {}));
      root.value += static_cast<double>(counts[r]);
    }
  }
  sort_tree(sort_tree, root);
  return root;
}

TablePage Engine::record_page(const TableQuery& query) const {
  if (query.limit == 0) throw Error(ErrorCode::InvalidQuery, "limit must be >= 1");
  const auto& ds = index_->dataset();
  std::optional<std::size_t> sort_col;
  if (query.sort_column) {
    sort_col = ds.find_column(*query.sort_column);
    if (!sort_col) {
      throw Error(ErrorCode::UnknownSortColumn, "no column named '" + *query.sort_column + "'");
    }
  }

  TablePage page;
  page.visible = visible_;
  std::vector<std::uint32_t> rows;
  rows.reserve(visible_);
  const std::string needle = to_lower_ascii(query.search);
  std::vector<std::size_t> searchable;
  for (std::size_t c = 0; c < ds.column_count(); ++c) {
    if (is_searchable(ds.schema()[c].kind)) searchable.push_back(c);
  }
  for (std::uint32_t r = 0; r < mask_.size(); ++r) {
    if (mask_[r] != 0) continue;
    if (!needle.empty()) {
      bool hit = false;
      for (auto c : searchable) {
        const auto& column = ds.column(c);
        if (column.is_null(r)) continue;
        if (to_lower_ascii(row_text(column, ds.schema()[c], r)).find(needle) != std::string::npos) {
          hit = true;
          break;
        }
      }
      if (!hit) continue;
    }
    rows.push_back(r);
  }
  page.matched = rows.size();

  if (sort_col) {
    const auto& column = ds.column(*sort_col);
    const auto& schema = ds.schema()[*sort_col];
    const bool asc = query.ascending;
    auto less = [&](std::uint32_t a, std::uint32_t b) {
      const bool an = column.is_null(a);
      const bool bn = column.is_null(b);
      if (an || bn) return !an && bn;
      switch (column.storage()) {
        case Column::Storage::numbers: {
          const double x = column.number(a);
          const double y = column.number(b);
          return asc ? x < y : y < x;
        }
        case Column::Storage::strings: {
          const auto& x = column.string(a);
          const auto& y = column.string(b);
          return asc ? x < y : y < x;
        }
        case Column::Storage::lists: {
          const auto x = row_text(column, schema, a);
          const auto y = row_text(column, schema, b);
          return asc ? x < y : y < x;
        }
      }
      return false;
    };
    std::stable_sort(rows.begin(), rows.end(), less);
  }

  const std::size_t begin = std::min(query.offset, rows.size());
  const std::size_t end = std::min(rows.size(), begin + query.limit);
  for (std::size_t i = begin; i < end; ++i) {
    TableRow row;
    row.ordinal = rows[i];
    row.cells.reserve(ds.column_count());
    for (std::size_t c = 0; c < ds.column_count(); ++c) row.cells.push_back(ds.cell(rows[i], c));
    page.rows.push_back(std::move(row));
  }
  return page;
}

void Engine::export_csv(std::ostream& out) const {
  const auto& ds = index_->dataset();
  std::vector<std::string> fields;
  fields.reserve(ds.column_count());
  for (const auto& s : ds.schema()) fields.push_back(s.name);
  csv::write_row(out, fields);
  for (std::size_t r = 0; r < mask_.size(); ++r) {
    if (mask_[r] != 0) continue;
    fields.clear();
    for (std::size_t c = 0; c < ds.column_count(); ++c) {
      fields.push_back(row_text(ds.column(c), ds.schema()[c], r));
    }
    csv::write_row(out, fields);
  }
}

std::string Engine::export_csv() const {
  std::ostringstream out;
  export_csv(out);
  return out.str();
}

}  // namespace idwmap
