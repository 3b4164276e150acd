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
#include <vector>

#include "idwmap/dataset.hpp"
#include "idwmap/filter.hpp"

namespace idwmap {

struct SyntheticData {
  Dataset dataset;
  std::vector<DimensionSpec> dimensions;
};

// Deterministic synthetic table with `dims` dimensions cycling through
// scalar, categorical, multi-value, scalar, categorical, spatial, ...
// Dimension 0 is always a scalar over [0, 100).
SyntheticData synthetic_data(std::size_t records, std::size_t dims, std::uint64_t seed);

struct BenchOptions {
  std::size_t records = 1'000'000;
  std::size_t dims = 8;
  std::size_t iterations = 50;
  std::uint64_t seed = 42;
};

struct BenchReport {
  std::size_t records = 0;
  std::size_t dims = 0;
  double generate_ms = 0.0;
  double build_ms = 0.0;
  // One sample per iteration: a range-filter change on dimension 0 followed
  // by recomputing the group of every groupable dimension.
  std::vector<double> samples_ms;
  double median_ms = 0.0;
  double p95_ms = 0.0;
  double max_ms = 0.0;
};

BenchReport run_bench(const BenchOptions& options);

}  // namespace idwmap
