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


#include "idwmap/validate.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

#include "idwmap/config.hpp"
#include "idwmap/error.hpp"
#include "idwmap/ingest.hpp"
#include "idwmap/service.hpp"

namespace idwmap {
namespace {

using nlohmann::json;

constexpr std::string_view kData =
    "name,score,year,continent,country,tags,lat,lon\n"
    "a,1,2018,Europe,Denmark,x;y,10,10\n"
    "b,2,2019,Europe,Poland,y,20,20\n"
    "c,3,2020,Asia,Japan,z,30,30\n";

json base_config() {
  return json::parse(R"({
    "name": "t", "title": "T", "dataset": {"path": "unused.csv"},
    "columns": [{"name": "continent", "kind": "categorical"}, {"name": "country", "kind": "categorical"},
                {"name": "tags", "kind": "multi_categorical", "delimiter": ";"}],
    "dimensions": [
      {"name": "place", "kind": "spatial", "columns": ["lat", "lon"]},
      {"name": "score", "kind": "scalar_ordered", "column": "score"},
      {"name": "continent", "kind": "categorical", "column": "continent"},
      {"name": "tags", "kind": "multi_value", "column": "tags"},
      {"name": "geo", "kind": "hierarchy", "columns": ["continent", "country"]},
      {"name": "words", "kind": "text_term", "column": "name"}],
    "components": [
      {"id": "map", "kind": "map", "dimension": "place"},
      {"id": "table", "kind": "table"}],
    "map_elements": {"title": "Map", "legend": true, "scale_bar": true, "north_arrow": true}
  })");
}

std::vector<Diagnostic> run(const json& j) {
  const auto config = parse_config(j.dump());
  const auto data = parse_tabular(kData, InputFormat::csv, config.schema_hints());
  return validate_config(config, data.schema(), &data);
}

std::size_t count(const std::vector<Diagnostic>& d, const std::string& rule) {
  return static_cast<std::size_t>(std::count_if(d.begin(), d.end(), [&](const Diagnostic& x) { return x.rule == rule; }));
}

json with_component(json j, json component) {
  j["components"].push_back(std::move(component));
  return j;
}

TEST(Validate, BaseConfigIsClean) {
  EXPECT_TRUE(run(base_config()).empty());
}

TEST(Validate, DonutOnNumericIsOneMismatch) {
  const auto d = run(with_component(base_config(), {{"id", "donut"}, {"kind", "donut"}, {"dimension", "score"}}));
  EXPECT_EQ(count(d, "chart_data_mismatch"), 1u);
  EXPECT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].severity, Severity::error);
  EXPECT_EQ(d[0].location, "donut");
}

TEST(Validate, LineOnCategoricalIsOneMismatch) {
  const auto d =
      run(with_component(base_config(), {{"id", "line"}, {"kind", "line_zoom_focus"}, {"dimension", "continent"}}));
  EXPECT_EQ(count(d, "chart_data_mismatch"), 1u);
  EXPECT_EQ(d.size(), 1u);
}

TEST(Validate, CompatibilityMatrix) {
  struct Case {
    const char* kind;
    const char* dim;
    bool ok;
  };
  const Case cases[] = {
      {"bar", "continent", true},      {"bar", "tags", true},         {"bar", "score", false},
      {"donut", "tags", true},         {"row", "continent", true},    {"row_xscroll", "geo", false},
      {"sunburst", "geo", true},       {"sunburst", "continent", false}, {"line_zoom_focus", "score", true},
      {"word_cloud", "words", true},   {"word_cloud", "tags", false}, {"donut", "place", false},
  };
  for (const auto& c : cases) {
    const auto d = run(with_component(base_config(), {{"id", "x"}, {"kind", c.kind}, {"dimension", c.dim}}));
    EXPECT_EQ(count(d, "chart_data_mismatch"), c.ok ? 0u : 1u) << c.kind << " on " << c.dim;
  }
  for (auto kind : {ComponentKind::map, ComponentKind::donut, ComponentKind::bar, ComponentKind::row,
                    ComponentKind::row_xscroll, ComponentKind::sunburst, ComponentKind::line_zoom_focus,
                    ComponentKind::word_cloud, ComponentKind::table}) {
    EXPECT_EQ(rule_for(kind).kind, kind);
  }
}

TEST(Validate, RedGreenPalette) {
  auto j = base_config();
  j["palette"] = {"#d73027", "#1a9850"};
  const auto d = run(j);
  EXPECT_EQ(count(d, "redgreen_palette"), 1u);
  EXPECT_FALSE(has_errors(d));
  j["palette"] = {"#3f007d", "#807dba", "#dadaeb"};
  EXPECT_TRUE(run(j).empty());
  j = with_component(base_config(), {{"id", "bar"}, {"kind", "bar"}, {"dimension", "continent"},
                                     {"palette", {"#ff0000", "#00ff00"}}});
  EXPECT_EQ(count(run(j), "redgreen_palette"), 1u);
}

TEST(Validate, HueBands) {
  EXPECT_EQ(hue_degrees({255, 0, 0}), 0.0);
  EXPECT_EQ(hue_degrees({0, 255, 0}), 120.0);
  EXPECT_EQ(hue_degrees({0, 0, 255}), 240.0);
  EXPECT_FALSE(hue_degrees({128, 128, 128}));
  const std::vector<std::string> gray_red{"#808080", "#ff0000"};
  EXPECT_FALSE(mixes_red_and_green(gray_red));
  const std::vector<std::string> magenta_lime{"#ff0055", "#55ff00"};
  EXPECT_TRUE(mixes_red_and_green(magenta_lime));
  const std::vector<std::string> orange_teal{"#ff9900", "#00ccaa"};
  EXPECT_FALSE(mixes_red_and_green(orange_teal));
  EXPECT_TRUE(parse_hex_color("#abc"));
  EXPECT_FALSE(parse_hex_color("red"));
  EXPECT_FALSE(parse_hex_color("#12345"));
}

TEST(Validate, InvalidColorWarns) {
  auto j = base_config();
  j["palette"] = {"#zzzzzz"};
  EXPECT_EQ(count(run(j), "invalid_color"), 1u);
}

TEST(Validate, MissingMapElements) {
  auto j = base_config();
  j.erase("map_elements");
  const auto d = run(j);
  EXPECT_EQ(count(d, "missing_map_element"), 4u);
  EXPECT_FALSE(has_errors(d));
  j = base_config();
  j["map_elements"]["north_arrow"] = false;
  EXPECT_EQ(count(run(j), "missing_map_element"), 1u);
}

TEST(Validate, ExactlyOneMapAndTable) {
  auto j = base_config();
  j["components"] = json::array();
  auto d = run(j);
  EXPECT_EQ(count(d, "map_count"), 1u);
  EXPECT_EQ(count(d, "table_count"), 1u);
  j = with_component(base_config(), {{"id", "map2"}, {"kind", "map"}, {"dimension", "place"}});
  EXPECT_EQ(count(run(j), "map_count"), 1u);
}

TEST(Validate, Brushing) {
  auto d = run(with_component(base_config(), {{"id", "bar"}, {"kind", "bar"}, {"dimension", "continent"}, {"brushing", true}}));
  EXPECT_EQ(count(d, "brushing_low_span"), 1u);
  d = run(with_component(base_config(), {{"id", "d"}, {"kind", "donut"}, {"dimension", "continent"}, {"brushing", true}}));
  EXPECT_EQ(count(d, "brushing_unsupported"), 1u);
  EXPECT_EQ(count(d, "brushing_low_span"), 0u);
  const auto config = parse_config(
      with_component(base_config(), {{"id", "bar"}, {"kind", "bar"}, {"dimension", "continent"}, {"brushing", true}}).dump());
  const auto data = parse_tabular(kData, InputFormat::csv, config.schema_hints());
  EXPECT_TRUE(validate_config(config, data.schema()).empty());
}

TEST(Validate, StructuralErrors) {
  auto j = base_config();
  j["dimensions"].push_back({{"name", "score"}, {"kind", "categorical"}, {"column", "name"}});
  j["dimensions"].push_back({{"name", "ghost"}, {"kind", "categorical"}, {"column", "nope"}});
  j["dimensions"].push_back({{"name", "bad"}, {"kind", "scalar_ordered"}, {"column", "country"}});
  j["dimensions"].push_back({{"name", "pair"}, {"kind", "categorical"}, {"columns", {"name", "country"}}});
  j["components"].push_back({{"id", "table"}, {"kind", "row"}, {"dimension", "unknown"}});
  j["components"].push_back({{"id", "two"}, {"kind", "bar"}, {"dimensions", {"continent", "tags"}}});
  const auto d = run(j);
  EXPECT_EQ(count(d, "duplicate_dimension"), 1u);
  EXPECT_EQ(count(d, "missing_column"), 1u);
  EXPECT_EQ(count(d, "incompatible_column_kind"), 1u);
  EXPECT_EQ(count(d, "dimension_arity"), 1u);
  EXPECT_EQ(count(d, "duplicate_component"), 1u);
  EXPECT_EQ(count(d, "unknown_dimension"), 1u);
  EXPECT_EQ(count(d, "component_arity"), 1u);
  EXPECT_TRUE(has_errors(d));
}

TEST(Validate, TooManyDimensions) {
  auto j = base_config();
  for (int i = 0; i < 60; ++i) {
    j["dimensions"].push_back({{"name", "d" + std::to_string(i)}, {"kind", "categorical"}, {"column", "name"}});
  }
  EXPECT_EQ(count(run(j), "too_many_dimensions"), 1u);
}

TEST(Config, ParseErrors) {
  auto code = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  EXPECT_EQ(code("{"), ErrorCode::InvalidConfig);
  EXPECT_EQ(code("[]"), ErrorCode::InvalidConfig);
  EXPECT_EQ(code(R"({"dataset":{"path":"x"}})"), ErrorCode::InvalidConfig);
  EXPECT_EQ(code(R"({"name":"x"})"), ErrorCode::InvalidConfig);
  EXPECT_EQ(code(R"({"name":"x","dataset":{"path":"x","format":"xls"}})"), ErrorCode::InvalidConfig);
  EXPECT_EQ(code(R"({"name":"x","dataset":{"path":"x"},"components":[{"kind":"pie"}]})"), ErrorCode::InvalidConfig);
  EXPECT_EQ(code(R"({"name":"x","dataset":{"path":"x"},"dimensions":[{"name":"d","kind":"cube"}]})"),
            ErrorCode::InvalidConfig);
  EXPECT_EQ(code(R"({"name":"x","dataset":{"path":"x"},"components":[{"kind":"bar","binning":"weird"}]})"),
            ErrorCode::InvalidConfig);
  EXPECT_EQ(code(R"({"name":"x","dataset":{"path":"x"},"title":5})"), ErrorCode::InvalidConfig);
}

TEST(Config, ResolvesDatasetAgainstBaseDir) {
  const auto c = parse_config(R"({"name":"x","dataset":{"path":"data.csv"}})", "/srv/apps");
  EXPECT_EQ(c.dataset.path, std::filesystem::path("/srv/apps/data.csv"));
}

class CaseStudy : public ::testing::TestWithParam<const char*> {};

TEST_P(CaseStudy, ValidatesWithoutErrors) {
  const auto app = load_app(std::filesystem::path(IDWMAP_SOURCE_DIR) / GetParam());
  EXPECT_FALSE(has_errors(app->diagnostics));
  const auto& me = app->config.map_elements;
  EXPECT_FALSE(me.title.empty());
  EXPECT_TRUE(me.legend && me.scale_bar && me.north_arrow);
  for (const auto& d : app->diagnostics) EXPECT_NE(d.rule, "redgreen_palette");
}

INSTANTIATE_TEST_SUITE_P(Apps, CaseStudy,
                         ::testing::Values("apps/literature/literature.json", "apps/trelis/trelis.json",
                                           "apps/university/university.json", "apps/fig11/fig11.json"));

}  // namespace
}  // namespace idwmap
