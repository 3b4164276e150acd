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


import { describe, expect, it } from "vitest";

import {
  brushKeys,
  brushRange,
  filterToView,
  isSelected,
  sunburstClick,
  toggleValue,
  wordClick,
} from "../src/interactions.js";

describe("interactions", () => {
  it("toggles values in and out of a set", () => {
    const a = toggleValue("d", undefined, "x");
    expect(a).toEqual({ dimension: "d", spec: { type: "value_set", values: ["x"] } });
    const b = toggleValue("d", a.spec!, "w");
    expect(b.spec).toEqual({ type: "value_set", values: ["w", "x"] });
    const c = toggleValue("d", b.spec!, "x");
    expect(c.spec).toEqual({ type: "value_set", values: ["w"] });
    expect(toggleValue("d", c.spec!, "w").spec).toBeNull();
  });

  it("brushes a run of years into one value set", () => {
    const keys = ["2018", "2019", "2020", "2021", "2022"];
    expect(brushKeys("cohort_year", keys, 1, 0)).toEqual({
      dimension: "cohort_year",
      spec: { type: "value_set", values: ["2018", "2019"] },
    });
    expect(brushKeys("y", keys, 3, 99).spec).toEqual({ type: "value_set", values: ["2021", "2022"] });
  });

  it("range brush sets the focus domain and the filter together", () => {
    const r = brushRange("score", 100, 90);
    expect(r.focusDomain).toEqual([90, 100]);
    expect(r.mutation.spec).toEqual({ type: "range", lo: 90, hi: 100 });
  });

  it("clicking the active slice or word again clears it", () => {
    const s = sunburstClick("p", undefined, ["Europe", "Denmark"]);
    expect(s.spec).toEqual({ type: "path_prefix", path: ["Europe", "Denmark"] });
    expect(sunburstClick("p", s.spec!, ["Europe", "Denmark"]).spec).toBeNull();
    expect(sunburstClick("p", s.spec!, ["Europe"]).spec).toEqual({ type: "path_prefix", path: ["Europe"] });
    const w = wordClick("w", undefined, "Forest");
    expect(w.spec).toEqual({ type: "term", term: "forest" });
    expect(wordClick("w", w.spec!, "FOREST").spec).toBeNull();
  });

  it("map view becomes a bbox filter", () => {
    expect(filterToView("loc", { min_lat: 1, min_lon: 2, max_lat: 3, max_lon: 4 }).spec).toEqual({
      type: "bbox",
      min_lat: 1,
      min_lon: 2,
      max_lat: 3,
      max_lon: 4,
    });
  });

  it("everything is selected without a filter", () => {
    expect(isSelected(undefined, "a")).toBe(true);
    expect(isSelected({ type: "value_set", values: ["b"] }, "a")).toBe(false);
  });
});
