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

#include "idwmap/geo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "idwmap/engine.hpp"
#include "idwmap/error.hpp"

namespace idwmap {

MercatorPoint project(double lat, double lon) {
  if (!std::isfinite(lat) || !std::isfinite(lon)) {
    throw Error(ErrorCode::NonFiniteInput, "project() needs finite lat/lon");
  }
  const double phi = std::clamp(lat, -kMercatorMaxLat, kMercatorMaxLat) *
                     std::numbers::pi / 180.0;
  MercatorPoint p;
  p.x = (lon + 180.0) / 360.0;
  p.y = (1.0 - std::log(std::tan(phi) + 1.0 / std::cos(phi)) / std::numbers::pi) / 2.0;
  return p;
}

bool bbox_pass(const GeoPoint& p, const filter::BBox& b) {
  return p.lat >= b.min_lat && p.lat <= b.max_lat && p.lon >= b.min_lon && p.lon <= b.max_lon;
}

bool bbox_pass(const std::optional<GeoPoint>& point, const filter::BBox& box) {
  return point.has_value() && bbox_pass(*point, box);
}

std::pair<std::int64_t, std::int64_t> cluster_cell(const GeoPoint& point, int zoom, int cell_px,
                                                    int tile_px) {
  const MercatorPoint m = project(point.lat, point.lon);
  const double scale = std::ldexp(static_cast<double>(tile_px) / cell_px, zoom);
  const auto cells = static_cast<std::int64_t>(std::max(1.0, std::floor(scale)));
  auto cell = [&](double v) {
    auto c = static_cast<std::int64_t>(std::floor(v * scale));
    return std::clamp<std::int64_t>(c, 0, cells - 1);
  };
  return {cell(m.x), cell(m.y)};
}

std::vector<Cluster> cluster(const Engine& engine, const ClusterOptions& options) {
  if (options.zoom < 0 || options.zoom > 22) {
    throw Error(ErrorCode::InvalidZoom, "zoom must be within [0, 22]");
  }
  if (options.cell_px <= 0 || options.tile_px <= 0) {
    throw Error(ErrorCode::InvalidQuery, "cell_px and tile_px must be positive");
  }
  check_bbox(options.bbox);

  const auto& index = engine.index();
  const SpatialIndex* spatial = nullptr;
  for (DimensionId d = 0; d < index.dimension_count(); ++d) {
    if (index.dimension(d).kind == DimensionKind::spatial) {
      spatial = &index.dimension(d).spatial();
      break;
    }
  }
  if (!spatial) return {};

  struct Acc {
    std::size_t count = 0;
    double lat = 0.0;
    double lon = 0.0;
    std::vector<std::uint32_t> members;
  };
  std::map<std::pair<std::int64_t, std::int64_t>, Acc> cells;
  for (std::uint32_t r = 0; r < index.record_count(); ++r) {
    if (!engine.visible(r) || !spatial->present[r]) continue;
    const GeoPoint& p = spatial->points[r];
    if (!bbox_pass(p, options.bbox)) continue;
    auto [cx, cy] = cluster_cell(p, options.zoom, options.cell_px, options.tile_px);
    Acc& acc = cells[{cy, cx}];
    ++acc.count;
    acc.lat += p.lat;
    acc.lon += p.lon;
    if (acc.members.size() <= options.popup_threshold) acc.members.push_back(r);
  }

  std::vector<Cluster> out;
  out.reserve(cells.size());
  for (auto& [key, acc] : cells) {
    Cluster c;
    c.zoom = options.zoom;
    c.cy = key.first;
    c.cx = key.second;
    c.count = acc.count;
    c.centroid = {acc.lat / static_cast<double>(acc.count), acc.lon / static_cast<double>(acc.count)};
    if (acc.count <= options.popup_threshold) c.members = std::move(acc.members);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace idwmap
