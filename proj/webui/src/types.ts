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


// Wire types for the dashboard API.

export type FilterSpec =
  | { type: "none" }
  | { type: "value_set"; values: string[] }
  | { type: "range"; lo: number; hi: number }
  | { type: "bbox"; min_lat: number; min_lon: number; max_lat: number; max_lon: number }
  | { type: "term"; term: string }
  | { type: "path_prefix"; path: string[] };

export type DimensionKind =
  | "categorical"
  | "multi_value"
  | "scalar_ordered"
  | "spatial"
  | "hierarchy"
  | "text_term";

export type ComponentKind =
  | "map"
  | "donut"
  | "bar"
  | "row"
  | "row_xscroll"
  | "sunburst"
  | "line_zoom_focus"
  | "word_cloud"
  | "table";

export interface Counter {
  selected: number;
  total: number;
}

export interface KeyBin {
  key: string;
  value: number;
}

export interface NumericBin {
  lo: number;
  hi: number;
  value: number;
}

export interface GroupResult {
  dimension: string;
  exclusion: string;
  bins: Array<KeyBin | NumericBin>;
}

export interface HierarchyNode {
  path: string[];
  value: number;
  children: HierarchyNode[];
}

export interface TermCount {
  term: string;
  frequency: number;
}

export interface Cluster {
  zoom: number;
  cx: number;
  cy: number;
  count: number;
  centroid: { lat: number; lon: number };
  members?: number[];
}

export interface ClusterPayload {
  zoom: number;
  clusters: Cluster[];
}

export type Cell = null | string | number | string[] | { lat: number; lon: number };

export interface TablePage {
  columns: Array<{ name: string; kind: string }>;
  rows: Array<{ ordinal: number; cells: Cell[] }>;
  matched: number;
  visible: number;
}

export interface ComponentState {
  id: string;
  kind: ComponentKind;
  dimensions: string[];
  data: unknown;
}

export interface StatePayload {
  counter: Counter;
  filters: Record<string, FilterSpec>;
  components: ComponentState[];
}

export interface Basemap {
  name: string;
  url: string;
  attribution: string;
}

export interface ComponentSummary {
  id: string;
  kind: ComponentKind;
  title: string;
  dimensions: string[];
  brushing: boolean;
  k: number;
  popup: string;
  palette: string[];
  group: string;
}

export interface ConfigSummary {
  name: string;
  title: string;
  description: string;
  record_count: number;
  dimensions: Array<{ id: number; name: string; kind: DimensionKind; columns: string[] }>;
  components: ComponentSummary[];
  map_elements: {
    title: string;
    legend: boolean;
    scale_bar: boolean;
    north_arrow: boolean;
    minimap: boolean;
    basemaps: Basemap[];
  };
  palette: string[];
}

export interface SessionCreated {
  session: string;
  config: ConfigSummary;
  state: StatePayload;
}

export interface AppListing {
  name: string;
  title: string;
}

export function isKeyBin(bin: KeyBin | NumericBin): bin is KeyBin {
  return "key" in bin;
}

function isObject(v: unknown): v is Record<string, unknown> {
  return typeof v === "object" && v !== null && !Array.isArray(v);
}

function isCount(v: unknown): boolean {
  return typeof v === "number" && Number.isInteger(v) && v >= 0;
}

export function isGroupResult(v: unknown): v is GroupResult {
  if (!isObject(v) || typeof v.dimension !== "string" || !Array.isArray(v.bins)) return false;
  return v.bins.every(
    (b) =>
      isObject(b) &&
      typeof b.value === "number" &&
      (typeof b.key === "string" || (typeof b.lo === "number" && typeof b.hi === "number")),
  );
}

export function isHierarchyNode(v: unknown): v is HierarchyNode {
  return (
    isObject(v) &&
    Array.isArray(v.path) &&
    typeof v.value === "number" &&
    Array.isArray(v.children) &&
    v.children.every(isHierarchyNode)
  );
}

export function isTablePage(v: unknown): v is TablePage {
  return isObject(v) && Array.isArray(v.columns) && Array.isArray(v.rows) && isCount(v.matched) && isCount(v.visible);
}

function dataMatches(kind: ComponentKind, data: unknown): boolean {
  switch (kind) {
    case "map":
      return isObject(data) && Array.isArray(data.clusters) && data.clusters.every((c) => isObject(c) && isCount(c.count));
    case "donut":
    case "bar":
    case "row":
    case "row_xscroll":
    case "line_zoom_focus":
      return isGroupResult(data);
    case "sunburst":
      return isHierarchyNode(data);
    case "word_cloud":
      return Array.isArray(data) && data.every((t) => isObject(t) && typeof t.term === "string" && isCount(t.frequency));
    case "table":
      return isTablePage(data);
  }
  return false;
}

// Payload guard; renderers refuse anything that fails it.
export function checkStatePayload(v: unknown): string | null {
  if (!isObject(v)) return "payload is not an object";
  if (!isObject(v.counter) || !isCount(v.counter.selected) || !isCount(v.counter.total)) return "bad counter";
  if (!isObject(v.filters)) return "bad filters";
  if (!Array.isArray(v.components)) return "bad components";
  for (const c of v.components) {
    if (!isObject(c) || typeof c.id !== "string" || typeof c.kind !== "string") return "bad component entry";
    if (!dataMatches(c.kind as ComponentKind, c.data)) return `component '${c.id}' data does not match ${c.kind}`;
  }
  return null;
}
