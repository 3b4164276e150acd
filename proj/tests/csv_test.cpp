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


#include "idwmap/csv.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "idwmap/error.hpp"

namespace idwmap {
namespace {

using Rows = std::vector<std::vector<std::string>>;

ErrorCode code_of(std::string_view bytes) {
  try {
    csv::read(bytes);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << bytes;
  return ErrorCode::Io;
}

TEST(Csv, PlainRows) {
  const auto t = csv::read("a,b,c\n1,2,3\nx,,z\n");
  EXPECT_EQ(t.header, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(t.rows, (Rows{{"1", "2", "3"}, {"x", "", "z"}}));
  EXPECT_EQ(t.lines, (std::vector<std::size_t>{2, 3}));
}

TEST(Csv, QuotedFieldsWithCommasQuotesAndNewlines) {
  const auto t = csv::read("name,note\r\n\"Adam Mickiewicz University, Poznan\",\"say \"\"hi\"\"\"\r\n\"two\nlines\",x\r\n");
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0][0], "Adam Mickiewicz University, Poznan");
  EXPECT_EQ(t.rows[0][1], "say \"hi\"");
  EXPECT_EQ(t.rows[1][0], "two\nlines");
  EXPECT_EQ(t.lines, (std::vector<std::size_t>{2, 3}));
}

TEST(Csv, BomAndMissingFinalNewline) {
  const auto t = csv::read("\xEF\xBB\xBFid,v\n1,2");
  EXPECT_EQ(t.header[0], "id");
  EXPECT_EQ(t.rows, (Rows{{"1", "2"}}));
}

TEST(Csv, BlankLinesSkipped) {
  const auto t = csv::read("a,b\n\n1,2\n\n3,4\n");
  EXPECT_EQ(t.rows, (Rows{{"1", "2"}, {"3", "4"}}));
  EXPECT_EQ(t.lines, (std::vector<std::size_t>{3, 5}));
}

TEST(Csv, SingleColumnBlankLineIsAnEmptyField) {
  const auto t = csv::read("a\n1\n\n2\n");
  EXPECT_EQ(t.rows, (Rows{{"1"}, {""}, {"2"}}));
}

TEST(Csv, HeaderOnly) {
  const auto t = csv::read("a,b\n");
  EXPECT_EQ(t.header.size(), 2u);
  EXPECT_TRUE(t.rows.empty());
}

TEST(Csv, Errors) {
  EXPECT_EQ(code_of(""), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of("a,b\n\"open,1\n"), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of("a,b\n1,2,3\n"), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of("a,b\n1\n"), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of("a,b\nx\"y,1\n"), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of("a,b\n\"x\"y,1\n"), ErrorCode::MalformedInput);
}

TEST(Csv, ErrorNamesTheLine) {
  try {
    csv::read("a,b\n1,2\n3,4,5\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos) << e.what();
  }
}

TEST(Csv, EscapeOnlyWhenNeeded) {
  EXPECT_EQ(csv::escape("plain"), "plain");
  EXPECT_EQ(csv::escape(""), "");
  EXPECT_EQ(csv::escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv::escape("q\"q"), "\"q\"\"q\"");
  EXPECT_EQ(csv::escape("l\nl"), "\"l\nl\"");
}

TEST(Csv, WriteThenReadRoundTrips) {
  const Rows rows{{"id", "text"}, {"1", "comma, here"}, {"2", "quote \" here"}, {"3", "new\r\nline"}, {"4", ""}};
  std::ostringstream out;
  for (const auto& r : rows) csv::write_row(out, r);
  const auto t = csv::read(out.str());
  EXPECT_EQ(t.header, rows[0]);
  EXPECT_EQ(t.rows, Rows(rows.begin() + 1, rows.end()));
}

}  // namespace
}  // namespace idwmap
