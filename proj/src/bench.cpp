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

#include "idwmap/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <string>

#include "idwmap/engine.hpp"
#include "idwmap/error.hpp"

namespace idwmap {

namespace {

enum class Slot { scalar, categorical, multi, spatial };

constexpr Slot kCycle[] = {Slot::scalar,  Slot::categorical, Slot::multi,  Slot::scalar,
                           Slot::categorical, Slot::spatial, Slot::scalar, Slot::categorical};

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

double percentile(std::vector<double> v, double p) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const double rank = p * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(rank));
  const auto hi = static_cast<std::size_t>(std::ceil(rank));
  return v[lo] + (v[hi] - v[lo]) * (rank - static_cast<double>(lo));
}

}  // namespace

SyntheticData synthetic_data(std::size_t records, std::size_t dims, std::uint64_t seed) {
  if (dims == 0 || dims > kMaxDimensions) {
    throw Error(ErrorCode::TooManyDimensions, "bench needs 1..64 dimensions");
  }
  std::mt19937_64 rng(seed);
  std::vector<ColumnSchema> schema;
  std::vector<Column> columns;
  SyntheticData out;

  for (std::size_t d = 0; d < dims; ++d) {
    const Slot slot = kCycle[d % std::size(kCycle)];
    const std::string base = "d" + std::to_string(d);
    switch (slot) {
      case Slot::scalar: {
        std::uniform_real_distribution<double> value(0.0, 100.0);
        std::vector<double> v(records);
        for (auto& x : v) x = value(rng);
        schema.push_back({base, ColumnKind::numeric, true, ','});
        columns.push_back(Column::from_numbers(std::move(v)));
        out.dimensions.push_back({base, DimensionKind::scalar_ordered, {base}});
        break;
      }
      case Slot::categorical: {
        const std::size_t keys = 10 + 40 * (d % 3);
        std::uniform_int_distribution<std::size_t> pick(0, keys - 1);
        std::vector<std::optional<std::string>> v(records);
        for (auto& x : v) x = "k" + std::to_string(pick(rng));
        schema.push_back({base, ColumnKind::categorical, true, ','});
        columns.push_back(Column::from_strings(std::move(v)));
        out.dimensions.push_back({base, DimensionKind::categorical, {base}});
        break;
      }
      case Slot::multi: {
        std::uniform_int_distribution<std::size_t> tag(0, 19);
        std::uniform_int_distribution<std::size_t> count(1, 3);
        std::vector<StringList> v(records);
        for (auto& x : v) {
          const std::size_t n = count(rng);
          for (std::size_t i = 0; i < n; ++i) x.push_back("t" + std::to_string(tag(rng)));
        }
        schema.push_back({base, ColumnKind::multi_categorical, true, ','});
        columns.push_back(Column::from_lists(std::move(v)));
        out.dimensions.push_back({base, DimensionKind::multi_value, {base}});
        break;
      }
      case Slot::spatial: {
        std::uniform_real_distribution<double> lat(-60.0, 70.0);
        std::uniform_real_distribution<double> lon(-180.0, 180.0);
        std::vector<double> la(records);
        std::vector<double> lo(records);
        for (std::size_t r = 0; r < records; ++r) {
          la[r] = lat(rng);
          lo[r] = lon(rng);
        }
        schema.push_back({base + "_lat", ColumnKind::geo_lat, true, ','});
        columns.push_back(Column::from_numbers(std::move(la)));
        schema.push_back({base + "_lon", ColumnKind::geo_lon, true, ','});
        columns.push_back(Column::from_numbers(std::move(lo)));
        out.dimensions.push_back({base, DimensionKind::spatial, {base + "_lat", base + "_lon"}});
        break;
      }
    }
  }
  out.dataset = Dataset(std::move(schema), std::move(columns));
  return out;
}

BenchReport run_bench(const BenchOptions& options) {
  BenchReport report;
  report.records = options.records;
  report.dims = options.dims;

  auto t0 = std::chrono::steady_clock::now();
  SyntheticData data = synthetic_data(options.records, options.dims, options.seed);
  report.generate_ms = elapsed_ms(t0);

  t0 = std::chrono::steady_clock::now();
  Engine engine = Engine::build(std::move(data.dataset), data.dimensions);
  report.build_ms = elapsed_ms(t0);

  std::vector<DimensionId> groupable;
  for (DimensionId d = 0; d < engine.index().dimension_count(); ++d) {
    if (engine.index().dimension(d).kind != DimensionKind::spatial) groupable.push_back(d);
  }

  std::mt19937_64 rng(options.seed ^ 0x9E3779B97F4A7C15ull);
  std::uniform_real_distribution<double> start(0.0, 90.0);
  std::uniform_real_distribution<double> width(5.0, 40.0);
  // Keep a second filter active so the toggles touch cross-dimension counts.
  if (options.dims > 1 && engine.index().dimension(1).kind == DimensionKind::categorical) {
    engine.set_filter(1, filter::ValueSet{{"k1", "k2", "k3", "k4", "k5"}});
  }
  volatile double sink = 0.0;
  for (std::size_t i = 0; i < options.iterations; ++i) {
    const double lo = start(rng);
    const double hi = std::min(100.0, lo + width(rng));
    t0 = std::chrono::steady_clock::now();
    engine.set_filter(0, filter::Range{lo, hi});
    double total = static_cast<double>(engine.visible_count().selected);
    for (DimensionId d : groupable) {
      const GroupResult g = engine.group_reduce(d);
      if (!g.bins.empty()) total += g.bins.front().value;
    }
    report.samples_ms.push_back(elapsed_ms(t0));
    sink = sink + total;
  }
  report.median_ms = percentile(report.samples_ms, 0.5);
  report.p95_ms = percentile(report.samples_ms, 0.95);
  report.max_ms = report.samples_ms.empty() ? 0.0 : *std::max_element(report.samples_ms.begin(), report.samples_ms.end());
  return report;
}

}  // namespace idwmap
