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
#include <vector>

#include "idwmap/filter.hpp"
#include "idwmap/types.hpp"

namespace idwmap {

class Engine;

inline constexpr double kMercatorMaxLat = 85.05112878;

// Normalized Web Mercator world coordinates at zoom 0: x grows east, y grows
// south, both in [0, 1].
struct MercatorPoint {
  double x = 0.0;
  double y = 0.0;
};

// Latitude is clamped to +/-85.05112878 degrees first. Throws NonFiniteInput.
MercatorPoint project(double lat, double lon);

// Inclusive containment.
bool bbox_pass(const GeoPoint& point, const filter::BBox& box);
bool bbox_pass(const std::optional<GeoPoint>& point, const filter::BBox& box);

struct ClusterOptions {
  int zoom = 0;
  filter::BBox bbox{};
  int cell_px = 64;
  int tile_px = 256;
  // Member ordinals are listed only for clusters this small.
  std::size_t popup_threshold = 10;
};

struct Cluster {
  int zoom = 0;
  std::int64_t cx = 0;
  std::int64_t cy = 0;
  std::size_t count = 0;
  GeoPoint centroid;
  std::vector<std::uint32_t> members;
};

// Grid cell of a point: floor(coord * 2^zoom * tile_px / cell_px), clamped
// to the last cell on the east/south edge.
std::pair<std::int64_t, std::int64_t> cluster_cell(const GeoPoint& point, int zoom,
                                                    int cell_px = 64, int tile_px = 256);

// One cluster per non-empty cell over visible records of the engine's first
// spatial dimension that fall inside the bbox, ordered by (cy, cx).
// Throws InvalidBbox, InvalidZoom.
std::vector<Cluster> cluster(const Engine& engine, const ClusterOptions& options);

}  // namespace idwmap
