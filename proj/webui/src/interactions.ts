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


import type { FilterSpec } from "./types.js";

// A single filter change; `spec` null clears the dimension.
export interface Mutation {
  dimension: string;
  spec: FilterSpec | null;
}

function selectedValues(current: FilterSpec | undefined): string[] {
  return current && current.type === "value_set" ? current.values : [];
}

export function isSelected(current: FilterSpec | undefined, key: string): boolean {
  if (!current || current.type === "none") return true;
  return selectedValues(current).includes(key);
}

export function hasSelection(current: FilterSpec | undefined): boolean {
  return current !== undefined && current.type !== "none";
}

// Click on a bar, slice or legend entry.
export function toggleValue(dimension: string, current: FilterSpec | undefined, key: string): Mutation {
  const values = new Set(selectedValues(current));
  if (values.has(key)) {
    values.delete(key);
  } else {
    values.add(key);
  }
  if (values.size === 0) return { dimension, spec: null };
  return { dimension, spec: { type: "value_set", values: [...values].sort() } };
}

// Brush across an ordered set of category keys; lo/hi are positions.
export function brushKeys(dimension: string, keys: string[], lo: number, hi: number): Mutation {
  const a = Math.max(0, Math.min(lo, hi));
  const b = Math.min(keys.length - 1, Math.max(lo, hi));
  const picked = keys.slice(a, b + 1);
  if (picked.length === 0) return { dimension, spec: null };
  return { dimension, spec: { type: "value_set", values: [...picked].sort() } };
}

export interface RangeBrush {
  mutation: Mutation;
  focusDomain: [number, number];
}

// Brush on the range chart of a zoom-and-focus pair. The focus chart takes
// the brushed extent as its domain and the same extent becomes the filter.
export function brushRange(dimension: string, lo: number, hi: number): RangeBrush {
  const a = Math.min(lo, hi);
  const b = Math.max(lo, hi);
  return { mutation: { dimension, spec: { type: "range", lo: a, hi: b } }, focusDomain: [a, b] };
}

export function sunburstClick(dimension: string, current: FilterSpec | undefined, path: string[]): Mutation {
  if (current && current.type === "path_prefix" && sameList(current.path, path)) return { dimension, spec: null };
  return { dimension, spec: { type: "path_prefix", path: [...path] } };
}

export function wordClick(dimension: string, current: FilterSpec | undefined, term: string): Mutation {
  const t = term.toLowerCase();
  if (current && current.type === "term" && current.term.toLowerCase() === t) return { dimension, spec: null };
  return { dimension, spec: { type: "term", term: t } };
}

export function filterToView(
  dimension: string,
  view: { min_lat: number; min_lon: number; max_lat: number; max_lon: number },
): Mutation {
  return { dimension, spec: { type: "bbox", ...view } };
}

function sameList(a: string[], b: string[]): boolean {
  return a.length === b.length && a.every((v, i) => v === b[i]);
}
