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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idwmap/config.hpp"
#include "idwmap/dataset.hpp"

namespace idwmap {

enum class Severity { error, warning };

std::string_view to_string(Severity severity);

struct Diagnostic {
  Severity severity = Severity::error;
  std::string rule;
  std::string message;
  // Component id, dimension name, or config field path.
  std::string location;
  bool operator==(const Diagnostic&) const = default;
};

// One row per component kind: which dimension kinds it may display, how
// many it binds, and whether it offers brushing.
struct ComponentRule {
  ComponentKind kind;
  std::string_view label;
  std::string_view data_type;
  std::uint32_t dimension_kinds;
  std::size_t min_dimensions;
  std::size_t max_dimensions;
  bool brushing;
  bool legend_scrollable;
};

constexpr std::uint32_t dimension_bit(DimensionKind kind) {
  return std::uint32_t{1} << static_cast<unsigned>(kind);
}

std::span<const ComponentRule> compatibility_matrix();
const ComponentRule& rule_for(ComponentKind kind);

// Brushing below this many distinct values earns a brushing_low_span warning.
inline constexpr std::size_t kMinBrushingDistinct = 8;

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
};
std::optional<Rgb> parse_hex_color(std::string_view text);
// HSL hue in degrees [0, 360); nullopt for achromatic colours.
std::optional<double> hue_degrees(const Rgb& color);
// True when the palette mixes a red hue ([0,20] or [340,360]) with a green
// hue ([90,150]).
bool mixes_red_and_green(std::span<const std::string> palette);

// Pure and deterministic. Errors block serving, warnings do not. With a
// dataset, brushing spans are checked against actual distinct counts.
std::vector<Diagnostic> validate_config(const AppConfig& config,
                                        std::span<const ColumnSchema> schema,
                                        const Dataset* data = nullptr);

bool has_errors(std::span<const Diagnostic> diagnostics);

}  // namespace idwmap
