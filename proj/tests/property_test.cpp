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


#include <gtest/gtest.h>

#include "scenario.hpp"

namespace idwmap {
namespace {

void expect_clean(const scenario::Report& rep) {
  for (const auto& f : rep.failures) ADD_FAILURE() << f;
  EXPECT_EQ(rep.oracle_mismatches, 0u);
  EXPECT_EQ(rep.self_exclusion_violations, 0u);
  EXPECT_EQ(rep.batch_violations, 0u);
  EXPECT_EQ(rep.mask_violations, 0u);
}

TEST(Property, SmallScenariosMatchOracle) {
  scenario::Options opts;
  opts.scenarios = 40;
  opts.records = 300;
  opts.seed = 11;
  const auto rep = scenario::run(opts);
  EXPECT_EQ(rep.scenarios, 40u);
  expect_clean(rep);
}

TEST(Property, TinyDatasetsHitEdgeCases) {
  scenario::Options opts;
  opts.scenarios = 150;
  opts.records = 12;
  opts.seed = 5;
  expect_clean(scenario::run(opts));
}

TEST(Property, FilterOrderDoesNotMatter) {
  std::mt19937_64 rng(3);
  auto world = scenario::make_world(500, rng);
  const auto index = IndexSet::build(std::make_shared<const Dataset>(std::move(world.dataset)), world.specs);
  std::vector<FilterSpec> filters;
  for (DimensionId d = 0; d < scenario::kDims; ++d) filters.push_back(scenario::random_filter(d, index->dataset(), rng));
  Engine forward(index), backward(index);
  for (DimensionId d = 0; d < scenario::kDims; ++d) forward.set_filter(d, filters[d]);
  for (DimensionId d = scenario::kDims; d-- > 0;) backward.set_filter(d, filters[d]);
  EXPECT_TRUE(std::equal(forward.mask().begin(), forward.mask().end(), backward.mask().begin()));
  for (DimensionId d : {scenario::kCat, scenario::kTags, scenario::kWords}) {
    EXPECT_EQ(forward.group_reduce(d), backward.group_reduce(d));
  }
}

TEST(Property, SameSeedSameResults) {
  scenario::Options opts;
  opts.scenarios = 5;
  opts.records = 200;
  const auto a = scenario::run(opts);
  const auto b = scenario::run(opts);
  EXPECT_EQ(a.checks, b.checks);
  EXPECT_EQ(a.steps, b.steps);
}

TEST(Property, ReapplyingTheSameFilterTogglesNothing) {
  std::mt19937_64 rng(9);
  auto world = scenario::make_world(400, rng);
  auto engine = Engine::build(std::move(world.dataset), world.specs);
  engine.set_filter(scenario::kScore, filter::Range{-10, 10});
  EXPECT_EQ(engine.set_filter(scenario::kScore, filter::Range{-10, 10}).records_toggled, 0u);
  engine.set_filter(scenario::kCat, filter::ValueSet{{"c1", "c2"}});
  EXPECT_EQ(engine.set_filter(scenario::kCat, filter::ValueSet{{"c2", "c1"}}).records_toggled, 0u);
}

}  // namespace
}  // namespace idwmap
