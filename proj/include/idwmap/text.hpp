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
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "idwmap/filter.hpp"

namespace idwmap {

class Engine;

// The shipped English stopword list (data/stopwords.txt), one term per line.
const std::unordered_set<std::string>& stopwords();

// Lowercases ASCII, splits on every byte outside [a-z0-9-], drops tokens of
// length 1 and stopwords. Duplicates are kept; per-record dedup happens when
// the term index is built.
std::vector<std::string> tokenize(std::string_view text);

struct TermCount {
  std::string term;
  // Number of records (not occurrences) containing the term.
  std::size_t frequency = 0;
  bool operator==(const TermCount&) const = default;
};

// Top-k terms over records passing every filter except the text dimension's
// own term filter. Uses the first text_term dimension unless one is named.
// Throws NoTextDimension, InvalidQuery (k == 0).
std::vector<TermCount> term_counts(const Engine& engine, std::size_t k);
std::vector<TermCount> term_counts(const Engine& engine, DimensionId dim,
                                   std::size_t k);

}  // namespace idwmap
