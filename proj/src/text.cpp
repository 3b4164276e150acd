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

#include <algorithm>
#include <sstream>

#include "idwmap/engine.hpp"
#include "idwmap/error.hpp"
#include "idwmap/stopwords_data.hpp"

namespace idwmap {

const std::unordered_set<std::string>& stopwords() {
  static const std::unordered_set<std::string> words = [] {
    std::unordered_set<std::string> out;
    std::istringstream in(detail::kStopwordData);
    std::string line;
    while (std::getline(in, line)) {
      auto t = trim(line);
      if (!t.empty()) out.emplace(to_lower_ascii(t));
    }
    return out;
  }();
  return words;
}

std::vector<std::string> tokenize(std::string_view text) {
  const auto& stop = stopwords();
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    if (current.size() > 1 && !stop.contains(current)) out.push_back(current);
    current.clear();
  };
  for (char raw : text) {
    char c = raw;
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    const bool keep = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
    if (keep) {
      current.push_back(c);
    } else {
      flush();
    }
  }
  flush();
  return out;
}

std::vector<TermCount> term_counts(const Engine& engine, std::size_t k) {
  const auto& index = engine.index();
  for (DimensionId d = 0; d < index.dimension_count(); ++d) {
    if (index.dimension(d).kind == DimensionKind::text_term) {
      return term_counts(engine, d, k);
    }
  }
  throw Error(ErrorCode::NoTextDimension, "engine has no text_term dimension");
}

std::vector<TermCount> term_counts(const Engine& engine, DimensionId dim,
                                   std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidQuery, "k must be >= 1");
  const auto& dimension = engine.index().dimension(dim);
  if (dimension.kind != DimensionKind::text_term) {
    throw Error(ErrorCode::NoTextDimension,
                "dimension '" + dimension.name + "' is not text_term");
  }
  const auto& keys = dimension.keyed().keys;
  const auto counts = engine.slot_counts(dim);
  std::vector<TermCount> out;
  for (std::size_t slot = 0; slot < keys.size(); ++slot) {
    if (counts[slot] > 0) {
      out.push_back({keys[slot], static_cast<std::size_t>(counts[slot])});
    }
  }
  auto order = [](const TermCount& a, const TermCount& b) {
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.term < b.term;
  };
  if (out.size() > k) {
    std::partial_sort(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k),
                      out.end(), order);
    out.resize(k);
  } else {
    std::sort(out.begin(), out.end(), order);
  }
  return out;
}

}  // namespace idwmap
