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


import type { BBox } from "./api.js";
import type { Viewport } from "./viewmodel.js";

export const MAX_LAT = 85.05112878;
const TILE = 256;
const EARTH_CIRCUMFERENCE_M = 40075016.686;

export function mercator(lat: number, lon: number): { x: number; y: number } {
  const clamped = Math.max(-MAX_LAT, Math.min(MAX_LAT, lat));
  const s = Math.sin((clamped * Math.PI) / 180);
  return { x: (lon + 180) / 360, y: 0.5 - Math.log((1 + s) / (1 - s)) / (4 * Math.PI) };
}

export function inverseMercator(x: number, y: number): { lat: number; lon: number } {
  const lon = x * 360 - 180;
  const lat = (Math.atan(Math.sinh(Math.PI * (1 - 2 * y))) * 180) / Math.PI;
  return { lat, lon };
}

export function worldPx(zoom: number): number {
  return TILE * 2 ** zoom;
}

// Screen position of a point in the viewport.
export function toScreen(v: Viewport, lat: number, lon: number): { x: number; y: number } {
  const size = worldPx(v.zoom);
  const c = mercator(v.lat, v.lon);
  const p = mercator(lat, lon);
  return { x: (p.x - c.x) * size + v.width / 2, y: (p.y - c.y) * size + v.height / 2 };
}

export function viewBounds(v: Viewport): BBox {
  const size = worldPx(v.zoom);
  const c = mercator(v.lat, v.lon);
  const clamp01 = (t: number) => Math.max(0, Math.min(1, t));
  const nw = inverseMercator(clamp01(c.x - v.width / 2 / size), clamp01(c.y - v.height / 2 / size));
  const se = inverseMercator(clamp01(c.x + v.width / 2 / size), clamp01(c.y + v.height / 2 / size));
  return { min_lat: se.lat, min_lon: nw.lon, max_lat: nw.lat, max_lon: se.lon };
}

export function metersPerPixel(lat: number, zoom: number): number {
  return (EARTH_CIRCUMFERENCE_M * Math.cos((lat * Math.PI) / 180)) / worldPx(zoom);
}

// Largest 1-2-5 length that fits in maxPx.
export function scaleBar(lat: number, zoom: number, maxPx = 100): { meters: number; px: number; label: string } {
  const mpp = metersPerPixel(lat, zoom);
  const limit = mpp * maxPx;
  const pow = 10 ** Math.floor(Math.log10(limit));
  let meters = pow;
  for (const m of [5, 2, 1]) {
    if (m * pow <= limit) {
      meters = m * pow;
      break;
    }
  }
  const label = meters >= 1000 ? `${meters / 1000} km` : `${meters} m`;
  return { meters, px: meters / mpp, label };
}

export interface Tile {
  z: number;
  x: number;
  y: number;
  left: number;
  top: number;
}

export function visibleTiles(v: Viewport): Tile[] {
  const z = Math.round(v.zoom);
  const n = 2 ** z;
  const c = mercator(v.lat, v.lon);
  const ox = c.x * n * TILE - v.width / 2;
  const oy = c.y * n * TILE - v.height / 2;
  const out: Tile[] = [];
  for (let ty = Math.floor(oy / TILE); ty * TILE < oy + v.height; ++ty) {
    if (ty < 0 || ty >= n) continue;
    for (let tx = Math.floor(ox / TILE); tx * TILE < ox + v.width; ++tx) {
      const wrapped = ((tx % n) + n) % n;
      out.push({ z, x: wrapped, y: ty, left: tx * TILE - ox, top: ty * TILE - oy });
    }
  }
  return out;
}

export function tileUrl(template: string, t: Tile): string {
  return template.replace("{z}", String(t.z)).replace("{x}", String(t.x)).replace("{y}", String(t.y)).replace("{s}", "a");
}
