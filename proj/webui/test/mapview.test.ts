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

import { inverseMercator, mercator, metersPerPixel, scaleBar, tileUrl, toScreen, viewBounds, visibleTiles } from "../src/mapview.js";

describe("map view", () => {
  it("projects like the service", () => {
    expect(mercator(0, 0)).toEqual({ x: 0.5, y: 0.5 });
    const p = mercator(40, -105);
    expect(p.x).toBeCloseTo(0.20833333333333333333, 12);
    expect(p.y).toBeCloseTo(0.37857915774108090792, 12);
    expect(Math.abs(mercator(85.05112878, 0).y)).toBeLessThan(1e-9);
  });

  it("inverts the projection", () => {
    for (const [lat, lon] of [[0, 0], [40, -105], [-33.869, 151.209]] as const) {
      const p = mercator(lat, lon);
      const back = inverseMercator(p.x, p.y);
      expect(back.lat).toBeCloseTo(lat, 9);
      expect(back.lon).toBeCloseTo(lon, 9);
    }
  });

  it("view bounds contain the centre and match the screen edges", () => {
    const v = { lat: 35, lon: -100, zoom: 4, width: 640, height: 400 };
    const b = viewBounds(v);
    expect(b.min_lat).toBeLessThan(35);
    expect(b.max_lat).toBeGreaterThan(35);
    expect(toScreen(v, b.max_lat, b.min_lon).x).toBeCloseTo(0, 6);
    expect(toScreen(v, b.max_lat, b.min_lon).y).toBeCloseTo(0, 6);
    expect(toScreen(v, b.min_lat, b.max_lon).x).toBeCloseTo(640, 6);
    expect(toScreen(v, b.min_lat, b.max_lon).y).toBeCloseTo(400, 6);
  });

  it("scale bar uses 1-2-5 lengths within the limit", () => {
    expect(metersPerPixel(0, 0)).toBeCloseTo(156543.03, 1);
    const s = scaleBar(0, 0, 100);
    expect(s.meters).toBe(10_000_000);
    expect(s.label).toBe("10000 km");
    expect(s.px).toBeLessThanOrEqual(100);
    const t = scaleBar(45, 10, 100);
    expect([1, 2, 5]).toContain(t.meters / 10 ** Math.floor(Math.log10(t.meters)));
  });

  it("covers the viewport with tiles", () => {
    const tiles = visibleTiles({ lat: 0, lon: 0, zoom: 1, width: 512, height: 512 });
    expect(tiles).toHaveLength(4);
    expect(tileUrl("https://{s}.t/{z}/{x}/{y}.png", tiles[0]!)).toBe("https://a.t/1/0/0.png");
  });
});
