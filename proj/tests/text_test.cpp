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


#include "idwmap/text.hpp"

#include <gtest/gtest.h>

#include <random>

#include "idwmap/engine.hpp"
#include "idwmap/error.hpp"
#include "idwmap/ingest.hpp"
#include "oracle.hpp"

namespace idwmap {
namespace {

using Words = std::vector<std::string>;

TEST(Tokenize, Examples) {
  EXPECT_EQ(tokenize("Mapping the Land-Cover of Europe, 2020!"), (Words{"mapping", "land-cover", "europe", "2020"}));
  EXPECT_EQ(tokenize("A U-Net for GEE: x y zz"), (Words{"u-net", "gee", "zz"}));
  EXPECT_EQ(tokenize(""), Words{});
  EXPECT_EQ(tokenize("the and of"), Words{});
  EXPECT_EQ(tokenize("Poznań"), (Words{"pozna"}));
}

TEST(Tokenize, StopwordList) {
  EXPECT_EQ(stopwords().size(), 174u);
  for (const char* w : {"the", "and", "of", "is", "with", "for", "a"}) EXPECT_TRUE(stopwords().contains(w)) << w;
  EXPECT_FALSE(stopwords().contains("forest"));
}

TEST(Tokenize, MatchesRegexOracle) {
  std::mt19937_64 rng(17);
  const std::string alphabet = "abcXYZ019 -_,.;'\"\t\nTHEtheAnd\xC3\xA9";
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    const auto len = rng() % 40;
    for (std::size_t j = 0; j < len; ++j) s += alphabet[rng() % alphabet.size()];
    if (rng() % 4 == 0) s += " the and with ";
    EXPECT_EQ(tokenize(s), oracle::words(s)) << s;
  }
}

Engine text_engine() {
  SchemaHints h;
  h.columns = {{"kw", ColumnKind::multi_categorical, true, ';'}, {"c", ColumnKind::categorical}};
  return Engine::build(parse_tabular("title,kw,c\n"
                                     "Forest forest FOREST loss,deep learning,x\n"
                                     "Urban forest growth,machine learning;forest,y\n"
                                     "The flood,,x\n",
                                     InputFormat::csv, h),
                       {{"words", DimensionKind::text_term, {"title", "kw"}}, {"c", DimensionKind::categorical, {"c"}}});
}

TEST(TermCounts, CountsRecordsNotOccurrences) {
  auto e = text_engine();
  const auto terms = term_counts(e, 3);
  EXPECT_EQ(terms, (std::vector<TermCount>{{"forest", 2}, {"learning", 2}, {"deep", 1}}));
  EXPECT_EQ(term_counts(e, 100).size(), 8u);
}

TEST(TermCounts, FollowOtherFilters) {
  auto e = text_engine();
  e.set_filter(1, filter::ValueSet{{"x"}});
  EXPECT_EQ(term_counts(e, 100),
            (std::vector<TermCount>{{"deep", 1}, {"flood", 1}, {"forest", 1}, {"learning", 1}, {"loss", 1}}));
}

TEST(TermCounts, TermFilterIsCaseInsensitive) {
  auto e = text_engine();
  e.set_filter(0, filter::Term{"FOREST"});
  EXPECT_EQ(e.visible_count().selected, 2u);
  e.set_filter(0, filter::Term{"the"});
  EXPECT_EQ(e.visible_count().selected, 0u);
  // The cloud ignores its own term filter.
  EXPECT_EQ(term_counts(e, 1), (std::vector<TermCount>{{"forest", 2}}));
}

TEST(TermCounts, Errors) {
  auto e = text_engine();
  EXPECT_THROW(term_counts(e, 0), Error);
  auto plain = Engine::build(parse_tabular("c\nx\n", InputFormat::csv), {{"c", DimensionKind::categorical, {"c"}}});
  try {
    term_counts(plain, 5);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NoTextDimension);
  }
  try {
    term_counts(e, 1, 5);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NoTextDimension);
  }
}

}  // namespace
}  // namespace idwmap
