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


import type { TermCount } from "./types.js";

export interface PlacedWord {
  term: string;
  frequency: number;
  size: number;
  x: number;
  y: number;
  width: number;
  height: number;
  rotate: 0 | 90;
}

export interface CloudOptions {
  width: number;
  height: number;
  minSize: number;
  maxSize: number;
  seed: number;
  // Glyph width as a fraction of font size.
  charWidth: number;
  spiralStep: number;
}

export const DEFAULT_CLOUD: CloudOptions = {
  width: 480,
  height: 300,
  minSize: 10,
  maxSize: 48,
  seed: 1,
  charWidth: 0.6,
  spiralStep: 0.1,
};

// mulberry32
export function seededRandom(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function fontSize(frequency: number, maxFrequency: number, opts: CloudOptions): number {
  if (maxFrequency <= 0) return opts.minSize;
  return opts.minSize + (opts.maxSize - opts.minSize) * Math.sqrt(frequency / maxFrequency);
}

function overlaps(a: PlacedWord, b: PlacedWord): boolean {
  return a.x < b.x + b.width && b.x < a.x + a.width && a.y < b.y + b.height && b.y < a.y + a.height;
}

// Greedy placement along an archimedean spiral from the centre, biggest
// words first. Words that do not fit are dropped.
export function layoutCloud(terms: readonly TermCount[], options: Partial<CloudOptions> = {}): PlacedWord[] {
  const opts = { ...DEFAULT_CLOUD, ...options };
  const rand = seededRandom(opts.seed);
  const sorted = [...terms].sort((a, b) => b.frequency - a.frequency || (a.term < b.term ? -1 : a.term > b.term ? 1 : 0));
  const maxF = sorted[0]?.frequency ?? 0;
  const placed: PlacedWord[] = [];
  const maxT = Math.hypot(opts.width, opts.height) / opts.spiralStep;
  for (const t of sorted) {
    const size = fontSize(t.frequency, maxF, opts);
    const rotate: 0 | 90 = rand() < 0.25 ? 90 : 0;
    const long = t.term.length * size * opts.charWidth;
    const w = rotate ? size : long;
    const h = rotate ? long : size;
    const phase = rand() * Math.PI * 2;
    for (let s = 0; s < maxT; s += 1) {
      const theta = s * opts.spiralStep;
      const r = theta * 2;
      const cx = opts.width / 2 + r * Math.cos(theta + phase);
      const cy = opts.height / 2 + r * Math.sin(theta + phase);
      if (r > Math.hypot(opts.width, opts.height)) break;
      const word: PlacedWord = { term: t.term, frequency: t.frequency, size, x: cx - w / 2, y: cy - h / 2, width: w, height: h, rotate };
      if (word.x < 0 || word.y < 0 || word.x + w > opts.width || word.y + h > opts.height) continue;
      if (placed.some((p) => overlaps(p, word))) continue;
      placed.push(word);
      break;
    }
  }
  return placed;
}
