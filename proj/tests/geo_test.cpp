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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "idwmap/engine.hpp"
#include "idwmap/error.hpp"
#include "idwmap/ingest.hpp"

namespace idwmap {
namespace {

// Reference values computed with 50-digit arithmetic.
struct Spot {
  double lat, lon, x, y;
};
constexpr Spot kSpots[] = {
    {0, 0, 0.5, 0.5},
    {85.05112878, 0, 0.5, -6.2277003326497019984e-12},
    {-85.05112878, 180, 1.0, 1.0000000000062277003},
    {40, -105, 0.20833333333333333333, 0.37857915774108090792},
    {35.0844, -106.6198, 0.20383388888888888889, 0.39581147967899359247},
    {-33.869, 151.209, 0.920025, 0.60009292054896344294},
    {89, 0, 0.5, -6.2277003326497019984e-12},
};

TEST(Projection, SpotValues) {
  for (const auto& s : kSpots) {
    const auto p = project(s.lat, s.lon);
    EXPECT_NEAR(p.x, s.x, 1e-12) << s.lat << "," << s.lon;
    EXPECT_NEAR(p.y, s.y, 1e-12) << s.lat << "," << s.lon;
  }
  EXPECT_NEAR(project(kMercatorMaxLat, 0).y, 0.0, 1e-9);
  EXPECT_NEAR(project(-90, 0).y, 1.0, 1e-9);
}

TEST(Projection, MonotoneAndSymmetric) {
  double prev = 2.0;
  for (double lat = -85; lat <= 85; lat += 0.5) {
    const auto p = project(lat, 0);
    EXPECT_LT(p.y, prev);
    prev = p.y;
    EXPECT_NEAR(p.y + project(-lat, 0).y, 1.0, 1e-12);
  }
}

TEST(Projection, RejectsNonFinite) {
  try {
    project(NAN, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonFiniteInput);
  }
  EXPECT_THROW(project(0, HUGE_VAL), Error);
}

TEST(Cluster, CellAssignment) {
  EXPECT_EQ(cluster_cell({0, 0}, 0), (std::pair<std::int64_t, std::int64_t>{2, 2}));
  EXPECT_EQ(cluster_cell({40, -105}, 3), (std::pair<std::int64_t, std::int64_t>{6, 12}));
  EXPECT_EQ(cluster_cell({-33.869, 151.209}, 5), (std::pair<std::int64_t, std::int64_t>{117, 76}));
  EXPECT_EQ(cluster_cell({-90, 180}, 0), (std::pair<std::int64_t, std::int64_t>{3, 3}));
  EXPECT_EQ(cluster_cell({90, -180}, 2), (std::pair<std::int64_t, std::int64_t>{0, 0}));
  EXPECT_EQ(cluster_cell({0, 0}, 0, 256, 256), (std::pair<std::int64_t, std::int64_t>{0, 0}));
}

Engine points_engine(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> lat(-80, 80), lon(-180, 180);
  std::string csv = "lat,lon,group\n";
  for (std::size_t i = 0; i < n; ++i) {
    csv += (i % 17 == 0 ? std::string(",") : std::to_string(lat(rng)) + "," + std::to_string(lon(rng))) + "," +
           (i % 3 ? "a" : "b") + "\n";
  }
  SchemaHints h;
  h.columns = {{"group", ColumnKind::categorical}};
  return Engine::build(parse_tabular(csv, InputFormat::csv, h), {{"p", DimensionKind::spatial, {"lat", "lon"}},
                                                                  {"group", DimensionKind::categorical, {"group"}}});
}

TEST(Cluster, CountsSumToVisibleInBox) {
  auto e = points_engine(3000, 1);
  e.set_filter(1, filter::ValueSet{{"a"}});
  const filter::BBox box{-30, -100, 60, 40};
  std::size_t expect = 0;
  const auto& ds = e.dataset();
  for (std::size_t r = 0; r < ds.record_count(); ++r) {
    const double la = ds.column(0).number(r), lo = ds.column(1).number(r);
    if (e.visible(r) && !std::isnan(la) && la >= -30 && la <= 60 && lo >= -100 && lo <= 40) ++expect;
  }
  for (int z = 0; z <= 8; ++z) {
    const auto clusters = cluster(e, {z, box});
    std::size_t total = 0;
    for (const auto& c : clusters) total += c.count;
    EXPECT_EQ(total, expect) << "zoom " << z;
  }
}

TEST(Cluster, RefinesAcrossZooms) {
  auto e = points_engine(2000, 2);
  for (int z = 0; z < 7; ++z) {
    std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> parent, rolled;
    for (const auto& c : cluster(e, {z})) parent[{c.cx, c.cy}] = c.count;
    for (const auto& c : cluster(e, {z + 1})) rolled[{c.cx / 2, c.cy / 2}] += c.count;
    EXPECT_EQ(parent, rolled) << "zoom " << z;
  }
}

TEST(Cluster, OrderCentroidAndMembers) {
  auto e = Engine::build(parse_tabular("lat,lon\n10,10\n20,20\n10.5,10.5\n-60,-170\n", InputFormat::csv),
                         {{"p", DimensionKind::spatial, {"lat", "lon"}}});
  ClusterOptions opts;
  opts.zoom = 1;
  opts.popup_threshold = 1;
  const auto clusters = cluster(e, opts);
  ASSERT_EQ(clusters.size(), 2u);
  EXPECT_LT(clusters[0].cy, clusters[1].cy);
  EXPECT_EQ(clusters[0].count, 3u);
  EXPECT_DOUBLE_EQ(clusters[0].centroid.lat, 40.5 / 3);
  EXPECT_TRUE(clusters[0].members.empty());
  EXPECT_EQ(clusters[1].members, (std::vector<std::uint32_t>{3}));
  e.set_filter(0, filter::BBox{0, 0, 15, 15});
  EXPECT_EQ(cluster(e, opts).size(), 1u);
  EXPECT_EQ(cluster(e, opts)[0].count, 2u);
}

TEST(Cluster, Errors) {
  auto e = points_engine(10, 3);
  auto code = [&](ClusterOptions o) {
    try {
      cluster(e, o);
    } catch (const Error& err) {
      return err.code();
    }
    return ErrorCode::Io;
  };
  EXPECT_EQ(code({-1}), ErrorCode::InvalidZoom);
  EXPECT_EQ(code({23}), ErrorCode::InvalidZoom);
  EXPECT_EQ(code({2, {10, 0, 0, 1}}), ErrorCode::InvalidBbox);
  EXPECT_EQ(code({2, {0, 0, 1, 200}}), ErrorCode::InvalidBbox);
}

TEST(Cluster, NoSpatialDimensionGivesNothing) {
  auto e = Engine::build(parse_tabular("v\n1\n", InputFormat::csv), {});
  EXPECT_TRUE(cluster(e, {}).empty());
}

}  // namespace
}  // namespace idwmap
