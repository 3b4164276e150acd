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

#include "idwmap/types.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <utility>

namespace idwmap {

namespace {

constexpr std::array<std::pair<ColumnKind, std::string_view>, 9> kKindNames{{
    {ColumnKind::categorical, "categorical"},
    {ColumnKind::numeric, "numeric"},
    {ColumnKind::temporal, "temporal"},
    {ColumnKind::text, "text"},
    {ColumnKind::multi_categorical, "multi_categorical"},
    {ColumnKind::geo_lat, "geo_lat"},
    {ColumnKind::geo_lon, "geo_lon"},
    {ColumnKind::url, "url"},
    {ColumnKind::identifier, "identifier"},
}};

}  // namespace

std::string_view to_string(ColumnKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<ColumnKind> parse_column_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::string format_number(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), end);
}

std::optional<double> parse_number(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  if (!std::isfinite(out)) return std::nullopt;
  return out;
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string cell_to_text(const CellValue& value, char delimiter) {
  struct Visitor {
    char delimiter;
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double d) const { return format_number(d); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const StringList& list) const {
      std::string out;
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) out.push_back(delimiter);
        out += list[i];
      }
      return out;
    }
    std::string operator()(const GeoPoint& p) const {
      return format_number(p.lat) + "," + format_number(p.lon);
    }
  };
  return std::visit(Visitor{delimiter}, value);
}

}  // namespace idwmap
