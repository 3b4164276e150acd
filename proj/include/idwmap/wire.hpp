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

#include <span>
#include <vector>

#include <json.hpp>

#include "idwmap/config.hpp"
#include "idwmap/engine.hpp"
#include "idwmap/geo.hpp"
#include "idwmap/text.hpp"
#include "idwmap/validate.hpp"

// JSON encodings shared by the HTTP API and the CLI. The layouts are
// documented in schema/wire.schema.json.
namespace idwmap::wire {

using nlohmann::json;

json to_json(const FilterSpec& spec);
// Throws InvalidFilter on a malformed body.
FilterSpec filter_from_json(const json& j);

json to_json(const CellValue& value);
json to_json(const GroupResult& group, const IndexSet& index);
json to_json(const HierarchyNode& node);
json to_json(const TablePage& page, const Dataset& dataset);
json to_json(std::span<const TermCount> terms);
json to_json(std::span<const Cluster> clusters);
json to_json(const Diagnostic& diagnostic);
json to_json(const VisibleCount& counter);

json config_summary(const AppConfig& config, const IndexSet& index);

}  // namespace idwmap::wire
