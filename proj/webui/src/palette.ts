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


export const UNSELECTED = "#cccccc";
export const DEFAULT_ACCENT = "#3182bd";

export const DEFAULT_PALETTE: readonly string[] = [
  "#3182bd",
  "#6baed6",
  "#9ecae1",
  "#756bb1",
  "#9e9ac8",
  "#fd8d3c",
  "#fdae6b",
  "#636363",
  "#969696",
  "#bdbdbd",
];

export const PURPLE_PALETTE: readonly string[] = ["#3f007d", "#54278f", "#6a51a3", "#807dba", "#9e9ac8", "#bcbddc", "#dadaeb"];

export function parseHex(text: string): [number, number, number] | null {
  const m = /^#([0-9a-f]{3}|[0-9a-f]{6})$/i.exec(text.trim());
  if (!m || !m[1]) return null;
  let h = m[1];
  if (h.length === 3) h = [...h].map((c) => c + c).join("");
  return [parseInt(h.slice(0, 2), 16), parseInt(h.slice(2, 4), 16), parseInt(h.slice(4, 6), 16)];
}

export function hue(rgb: [number, number, number]): number | null {
  const [r, g, b] = rgb.map((v) => v / 255) as [number, number, number];
  const mx = Math.max(r, g, b);
  const mn = Math.min(r, g, b);
  const c = mx - mn;
  if (c === 0) return null;
  let h: number;
  if (mx === r) {
    h = ((g - b) / c) % 6;
  } else if (mx === g) {
    h = (b - r) / c + 2;
  } else {
    h = (r - g) / c + 4;
  }
  h *= 60;
  return h < 0 ? h + 360 : h;
}

// Same bands as the config validator.
export function mixesRedAndGreen(palette: readonly string[]): boolean {
  let red = false;
  let green = false;
  for (const c of palette) {
    const rgb = parseHex(c);
    if (!rgb) continue;
    const h = hue(rgb);
    if (h === null) continue;
    if (h <= 20 || h >= 340) red = true;
    if (h >= 90 && h <= 150) green = true;
  }
  return red && green;
}

export function colorAt(palette: readonly string[], i: number): string {
  const p = palette.length ? palette : DEFAULT_PALETTE;
  return p[i % p.length] ?? DEFAULT_ACCENT;
}
