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


import type { TableParams } from "./api.js";
import type { TablePage } from "./types.js";

export interface TableState {
  offset: number;
  limit: number;
  sort?: string;
  dir: "asc" | "desc";
  search: string;
}

export function initialTable(limit = 10): TableState {
  return { offset: 0, limit, dir: "asc", search: "" };
}

export function tableParams(s: TableState): TableParams {
  const p: TableParams = { offset: s.offset, limit: s.limit, dir: s.dir };
  if (s.sort) p.sort = s.sort;
  if (s.search) p.search = s.search;
  return p;
}

export function showingText(s: TableState, page: Pick<TablePage, "matched" | "rows">): string {
  if (page.matched === 0) return "Showing 0 to 0 of 0 entries";
  const from = s.offset + 1;
  const to = s.offset + page.rows.length;
  return `Showing ${from} to ${to} of ${page.matched} entries`;
}

export function nextPage(s: TableState, matched: number): TableState {
  if (s.offset + s.limit >= matched) return s;
  return { ...s, offset: s.offset + s.limit };
}

export function prevPage(s: TableState): TableState {
  return { ...s, offset: Math.max(0, s.offset - s.limit) };
}

// Clicking the sorted column reverses it; another column sorts ascending.
export function sortBy(s: TableState, column: string): TableState {
  if (s.sort === column) return { ...s, offset: 0, dir: s.dir === "asc" ? "desc" : "asc" };
  return { ...s, offset: 0, sort: column, dir: "asc" };
}

export function search(s: TableState, text: string): TableState {
  return { ...s, offset: 0, search: text };
}
