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


import { hasSelection, isSelected } from "./interactions.js";
import { scaleBar, tileUrl, toScreen, viewBounds, visibleTiles } from "./mapview.js";
import { colorAt, DEFAULT_ACCENT, UNSELECTED } from "./palette.js";
import { showingText } from "./table.js";
import {
  isKeyBin,
  type Cell,
  type ClusterPayload,
  type ComponentState,
  type ComponentSummary,
  type FilterSpec,
  type GroupResult,
  type HierarchyNode,
  type KeyBin,
  type NumericBin,
  type TablePage,
  type TermCount,
} from "./types.js";
import type { ViewModel } from "./viewmodel.js";
import { layoutCloud } from "./wordcloud.js";

export function esc(text: string): string {
  return text.replace(/[&<>"']/g, (c) => `&#${c.charCodeAt(0)};`);
}

function attr(name: string, value: string | number): string {
  return ` ${name}="${esc(String(value))}"`;
}

function fmt(v: number): string {
  return Number.isInteger(v) ? String(v) : String(Math.round(v * 100) / 100);
}

function n(v: number): string {
  return String(Math.round(v * 100) / 100);
}

interface Ctx {
  summary: ComponentSummary;
  state: ComponentState;
  filter: FilterSpec | undefined;
  palette: readonly string[];
  vm: ViewModel;
}

function keyAttrs(ctx: Ctx, action: string, key: string): string {
  return attr("data-action", action) + attr("data-component", ctx.summary.id) + attr("data-key", key);
}

function fillFor(ctx: Ctx, key: string, i: number, accent: boolean): string {
  if (hasSelection(ctx.filter) && !isSelected(ctx.filter, key)) return UNSELECTED;
  return accent ? colorAt(ctx.palette, 0) : colorAt(ctx.palette, i);
}

function keyBins(data: GroupResult): KeyBin[] {
  return data.bins.filter(isKeyBin);
}

function arc(cx: number, cy: number, r0: number, r1: number, a0: number, a1: number): string {
  const sweep = Math.min(a1 - a0, Math.PI * 2 - 1e-6);
  const end = a0 + sweep;
  const large = sweep > Math.PI ? 1 : 0;
  const p = (r: number, a: number) => `${n(cx + r * Math.sin(a))} ${n(cy - r * Math.cos(a))}`;
  return (
    `M${p(r1, a0)} A${n(r1)} ${n(r1)} 0 ${large} 1 ${p(r1, end)} ` +
    `L${p(r0, end)} A${n(r0)} ${n(r0)} 0 ${large} 0 ${p(r0, a0)} Z`
  );
}

function renderDonut(ctx: Ctx): string {
  const bins = keyBins(ctx.state.data as GroupResult);
  const total = bins.reduce((s, b) => s + b.value, 0);
  let a = 0;
  const slices = bins.map((b, i) => {
    const a1 = total > 0 ? a + (b.value / total) * Math.PI * 2 : a;
    const path = b.value > 0 ? `<path${attr("d", arc(80, 80, 45, 75, a, a1))}${attr("fill", fillFor(ctx, b.key, i, false))}${keyAttrs(ctx, "toggle", b.key)}><title>${esc(b.key)}: ${fmt(b.value)}</title></path>` : "";
    a = a1;
    return path;
  });
  const legend = bins
    .map(
      (b, i) =>
        `<li${keyAttrs(ctx, "toggle", b.key)}${hasSelection(ctx.filter) && isSelected(ctx.filter, b.key) ? ' class="selected"' : ""}>` +
        `<span class="swatch" style="background:${fillFor(ctx, b.key, i, false)}"></span>${esc(b.key)} <span class="value">${fmt(b.value)}</span></li>`,
    )
    .join("");
  const scroll = ctx.vm.ui.legendScroll.get(ctx.summary.id) ?? 0;
  return (
    `<svg class="donut" width="160" height="160" viewBox="0 0 160 160">${slices.join("")}</svg>` +
    `<ul class="legend"${attr("data-component", ctx.summary.id)}${attr("data-scroll", scroll)} style="max-height:140px;overflow-y:auto">${legend}</ul>`
  );
}

function renderBars(ctx: Ctx): string {
  const bins = keyBins(ctx.state.data as GroupResult);
  const max = Math.max(1, ...bins.map((b) => b.value));
  const w = 24;
  const h = 140;
  const brush = ctx.summary.brushing ? ' data-brush="keys"' : "";
  const rects = bins
    .map((b, i) => {
      const bh = (b.value / max) * h;
      return (
        `<g${keyAttrs(ctx, "toggle", b.key)}${attr("data-index", i)}>` +
        `<rect${attr("x", i * w + 2)}${attr("y", n(h - bh))}${attr("width", w - 4)}${attr("height", n(bh))}${attr("fill", fillFor(ctx, b.key, i, true))}></rect>` +
        `<text${attr("x", i * w + w / 2)}${attr("y", h + 12)} text-anchor="middle">${esc(b.key)}</text></g>`
      );
    })
    .join("");
  return `<svg class="bar"${brush}${attr("data-component", ctx.summary.id)}${attr("width", bins.length * w)}${attr("height", h + 16)}>${rects}</svg>`;
}

function renderRows(ctx: Ctx, xscroll: boolean): string {
  const bins = keyBins(ctx.state.data as GroupResult);
  const max = Math.max(1, ...bins.map((b) => b.value));
  const rowH = 20;
  const width = xscroll ? Math.max(480, bins.length * 8) : 320;
  const rows = bins
    .map((b, i) => {
      const bw = (b.value / max) * (width - 10);
      return (
        `<g${keyAttrs(ctx, "toggle", b.key)}>` +
        `<rect x="0"${attr("y", i * rowH)}${attr("width", n(bw))}${attr("height", rowH - 2)}${attr("fill", fillFor(ctx, b.key, i, true))}></rect>` +
        `<text x="4"${attr("y", i * rowH + 14)}>${esc(b.key)} (${fmt(b.value)})</text></g>`
      );
    })
    .join("");
  const style = xscroll ? "overflow-x:auto;overflow-y:auto;max-height:320px" : "overflow-y:auto;max-height:320px";
  return `<div class="rows" style="${style}"><svg class="row"${attr("width", width)}${attr("height", bins.length * rowH)}>${rows}</svg></div>`;
}

function renderSunburst(ctx: Ctx): string {
  const root = ctx.state.data as HierarchyNode;
  const ring = 28;
  const parts: string[] = [];
  const selected = ctx.filter && ctx.filter.type === "path_prefix" ? ctx.filter.path : null;
  const walk = (node: HierarchyNode, depth: number, a0: number, a1: number, colorIndex: number) => {
    if (depth > 0 && node.value > 0) {
      const onPath = !selected || selected.every((p, i) => i >= node.path.length || node.path[i] === p);
      const fill = onPath ? colorAt(ctx.palette, colorIndex) : UNSELECTED;
      parts.push(
        `<path${attr("d", arc(110, 110, (depth - 1) * ring + 20, depth * ring + 20, a0, a1))}${attr("fill", fill)}` +
          `${attr("data-action", "path")}${attr("data-component", ctx.summary.id)}${attr("data-path", JSON.stringify(node.path))}>` +
          `<title>${esc(node.path.join(" / "))}: ${fmt(node.value)}</title></path>`,
      );
    }
    const total = node.children.reduce((s, c) => s + c.value, 0);
    let a = a0;
    node.children.forEach((c, i) => {
      const b = total > 0 ? a + ((a1 - a0) * c.value) / total : a;
      walk(c, depth + 1, a, b, depth === 0 ? i : colorIndex);
      a = b;
    });
  };
  walk(root, 0, 0, Math.PI * 2, 0);
  return `<svg class="sunburst" width="220" height="220">${parts.join("")}</svg>`;
}

function linePath(bins: NumericBin[], lo: number, hi: number, w: number, h: number): string {
  const max = Math.max(1, ...bins.map((b) => b.value));
  const span = hi - lo || 1;
  return bins
    .filter((b) => b.hi > lo && b.lo < hi)
    .map((b, i) => `${i ? "L" : "M"}${n(((b.lo + b.hi) / 2 - lo) / span * w)} ${n(h - (b.value / max) * h)}`)
    .join(" ");
}

function renderLine(ctx: Ctx): string {
  const bins = (ctx.state.data as GroupResult).bins.filter((b): b is NumericBin => !isKeyBin(b));
  if (!bins.length) return `<p class="empty">No data</p>`;
  const lo = bins[0]!.lo;
  const hi = bins[bins.length - 1]!.hi;
  const [flo, fhi] = ctx.vm.ui.focus.get(ctx.summary.id) ?? [lo, hi];
  const brush = ctx.vm.ui.brush.get(ctx.summary.id);
  const w = 420;
  const color = colorAt(ctx.palette, 0);
  const focus = `<svg class="focus"${attr("data-domain", `${fmt(flo)},${fmt(fhi)}`)}${attr("width", w)} height="120"><path${attr("d", linePath(bins, flo, fhi, w, 110))} fill="none"${attr("stroke", color)}></path></svg>`;
  const handles = bins
    .map(
      (b, i) =>
        `<rect class="bin"${attr("x", n(((b.lo - lo) / (hi - lo || 1)) * w))} y="0"${attr("width", n(((b.hi - b.lo) / (hi - lo || 1)) * w))} height="40" fill="transparent"` +
        `${attr("data-index", i)}${attr("data-lo", b.lo)}${attr("data-hi", b.hi)}></rect>`,
    )
    .join("");
  const extent = brush
    ? `<rect class="extent"${attr("x", n(((brush[0] - lo) / (hi - lo || 1)) * w))} y="0"${attr("width", n(((brush[1] - brush[0]) / (hi - lo || 1)) * w))} height="40" fill="${DEFAULT_ACCENT}" fill-opacity="0.2"></rect>`
    : "";
  const range = `<svg class="range" data-brush="range"${attr("data-component", ctx.summary.id)}${attr("width", w)} height="40"><path${attr("d", linePath(bins, lo, hi, w, 38))} fill="none"${attr("stroke", color)}></path>${extent}${handles}</svg>`;
  return focus + range;
}

function renderCloud(ctx: Ctx): string {
  const terms = ctx.state.data as TermCount[];
  const words = layoutCloud(terms, { seed: hashSeed(ctx.summary.id) });
  const active = ctx.filter && ctx.filter.type === "term" ? ctx.filter.term : null;
  const text = words
    .map((wd, i) => {
      const cx = wd.x + wd.width / 2;
      const cy = wd.y + wd.height / 2;
      const rot = wd.rotate ? `${attr("transform", `rotate(90 ${n(cx)} ${n(cy)})`)}` : "";
      const fill = active && active !== wd.term ? UNSELECTED : colorAt(ctx.palette, i);
      return (
        `<text${attr("x", n(cx))}${attr("y", n(cy + wd.size / 3))} text-anchor="middle"${attr("font-size", n(wd.size))}${attr("fill", fill)}${rot}` +
        `${attr("data-action", "word")}${attr("data-component", ctx.summary.id)}${attr("data-term", wd.term)}>${esc(wd.term)}</text>`
      );
    })
    .join("");
  return `<svg class="cloud" width="480" height="300">${text}</svg>`;
}

export function hashSeed(text: string): number {
  let h = 2166136261;
  for (let i = 0; i < text.length; ++i) {
    h ^= text.charCodeAt(i);
    h = Math.imul(h, 16777619);
  }
  return h >>> 0;
}

export function renderCell(cell: Cell): string {
  if (cell === null) return "";
  if (Array.isArray(cell)) return esc(cell.join(", "));
  if (typeof cell === "object") return `${fmt(cell.lat)}, ${fmt(cell.lon)}`;
  if (typeof cell === "number") return fmt(cell);
  if (/^https?:\/\//i.test(cell)) return `<a${attr("href", cell)} target="_blank" rel="noopener">${esc(cell)}</a>`;
  if (/^[^@\s]+@[^@\s]+\.[^@\s]+$/.test(cell)) return `<a${attr("href", `mailto:${cell}`)}>${esc(cell)}</a>`;
  return esc(cell);
}

function cellText(cell: Cell): string {
  if (cell === null) return "";
  if (Array.isArray(cell)) return cell.join(", ");
  if (typeof cell === "object") return `${fmt(cell.lat)}, ${fmt(cell.lon)}`;
  return typeof cell === "number" ? fmt(cell) : cell;
}

// Fills a popup template. {field} inserts the escaped value, {img:field}
// an enlargeable image, {audio:field} an audio player.
export function renderPopup(template: string, columns: string[], cells: Cell[]): string {
  const body = template.replace(/\{(?:(img|audio):)?([^{}:]+)\}/g, (_m, media: string | undefined, field: string) => {
    const i = columns.indexOf(field);
    const value = cellText(i >= 0 ? (cells[i] ?? null) : null);
    if (!value) return "";
    if (media === "img") return `<a class="enlarge"${attr("href", value)} target="_blank"><img${attr("src", value)}${attr("alt", field)} width="120"></a>`;
    if (media === "audio") return `<audio controls${attr("src", value)}></audio>`;
    return esc(value);
  });
  return `<div class="popup">${body}</div>`;
}

function renderMap(ctx: Ctx): string {
  const vm = ctx.vm;
  const me = vm.config!.map_elements;
  const v = vm.ui.viewport;
  const data = vm.clusters ?? (ctx.state.data as ClusterPayload);
  const basemap = me.basemaps[vm.ui.basemap] ?? me.basemaps[0];
  const tiles = basemap
    ? visibleTiles(v)
        .map((t) => `<img class="tile"${attr("src", tileUrl(basemap.url, t))} style="position:absolute;left:${n(t.left)}px;top:${n(t.top)}px" width="256" height="256" alt="">`)
        .join("")
    : "";
  const maxCount = Math.max(1, ...data.clusters.map((c) => c.count));
  const color = colorAt(ctx.palette, 0);
  const circles = data.clusters
    .map((c) => {
      const p = toScreen(v, c.centroid.lat, c.centroid.lon);
      const r = 6 + 14 * Math.sqrt(c.count / maxCount);
      return (
        `<g${attr("data-action", "cluster")}${attr("data-cluster", `${c.cx},${c.cy}`)}>` +
        `<circle${attr("cx", n(p.x))}${attr("cy", n(p.y))}${attr("r", n(r))}${attr("fill", color)} fill-opacity="0.75"></circle>` +
        `<text${attr("x", n(p.x))}${attr("y", n(p.y + 4))} text-anchor="middle" fill="#fff">${c.count}</text></g>`
      );
    })
    .join("");
  const parts: string[] = [];
  if (me.title) parts.push(`<h2 class="map-title">${esc(me.title)}</h2>`);
  const options = me.basemaps
    .map((b, i) => `<option${attr("value", i)}${i === vm.ui.basemap ? " selected" : ""}>${esc(b.name)}</option>`)
    .join("");
  parts.push(`<select class="basemap" data-action="basemap">${options}</select>`);
  parts.push(`<button data-action="zoom-in">+</button><button data-action="zoom-out">-</button>`);
  parts.push(`<button data-action="filter-view"${attr("data-dimension", ctx.summary.dimensions[0] ?? "")}>Filter to current view</button>`);
  parts.push(
    `<div class="map-canvas" style="position:relative;overflow:hidden;width:${v.width}px;height:${v.height}px">${tiles}` +
      `<svg class="markers" style="position:absolute;left:0;top:0"${attr("width", v.width)}${attr("height", v.height)}>${circles}</svg></div>`,
  );
  if (me.legend) parts.push(`<div class="map-legend"><span class="swatch" style="background:${color}"></span> records (circle area by count)</div>`);
  if (me.scale_bar) {
    const s = scaleBar(v.lat, v.zoom);
    parts.push(`<div class="scale-bar"><span style="display:inline-block;width:${n(s.px)}px;border-bottom:2px solid #333"></span> ${s.label}</div>`);
  }
  if (me.north_arrow) parts.push(`<div class="north-arrow" title="North">&#8593; N</div>`);
  if (me.minimap) {
    const b = viewBounds(v);
    const x0 = ((b.min_lon + 180) / 360) * 120;
    const x1 = ((b.max_lon + 180) / 360) * 120;
    parts.push(`<svg class="minimap" width="120" height="60"><rect width="120" height="60" fill="#dde"></rect><rect${attr("x", n(x0))} y="5"${attr("width", n(Math.max(2, x1 - x0)))} height="50" fill="none" stroke="#c00"></rect></svg>`);
  }
  if (vm.ui.popup) {
    const c = data.clusters.find((k) => `${k.cx},${k.cy}` === vm.ui.popup!.cluster);
    if (c) {
      const cols = vm.page?.columns.map((k) => k.name) ?? [];
      const rows = (c.members ?? []).map((m) => vm.page?.rows.find((r) => r.ordinal === m));
      const bodies = rows.map((r) => (r ? renderPopup(ctx.summary.popup, cols, r.cells) : "")).join("");
      parts.push(`<div class="popup-box"><strong>${c.count} record(s)</strong>${bodies}</div>`);
    }
  }
  return parts.join("");
}

function renderTable(vm: ViewModel): string {
  const page: TablePage | null = vm.page;
  if (!page) return "";
  const head = page.columns
    .map((c) => {
      const mark = vm.table.sort === c.name ? (vm.table.dir === "asc" ? " &#9650;" : " &#9660;") : "";
      return `<th${attr("data-action", "sort")}${attr("data-column", c.name)}>${esc(c.name)}${mark}</th>`;
    })
    .join("");
  const body = page.rows
    .map((r) => `<tr${attr("data-ordinal", r.ordinal)}>${r.cells.map((c) => `<td>${renderCell(c)}</td>`).join("")}</tr>`)
    .join("");
  return (
    `<input class="search" type="search" placeholder="Search"${attr("value", vm.table.search)}>` +
    `<div class="table-scroll" style="overflow-x:auto"><table><thead><tr>${head}</tr></thead><tbody>${body}</tbody></table></div>` +
    `<div class="table-info">${esc(showingText(vm.table, page))}</div>` +
    `<button data-action="prev">Previous</button><button data-action="next">Next</button>`
  );
}

function renderComponent(vm: ViewModel, summary: ComponentSummary, state: ComponentState): string {
  const ctx: Ctx = {
    summary,
    state,
    filter: summary.dimensions[0] ? vm.filterOf(summary.dimensions[0]) : undefined,
    palette: summary.palette.length ? summary.palette : vm.config!.palette,
    vm,
  };
  let body: string;
  switch (summary.kind) {
    case "donut":
      body = renderDonut(ctx);
      break;
    case "bar":
      body = renderBars(ctx);
      break;
    case "row":
      body = renderRows(ctx, false);
      break;
    case "row_xscroll":
      body = renderRows(ctx, true);
      break;
    case "sunburst":
      body = renderSunburst(ctx);
      break;
    case "line_zoom_focus":
      body = renderLine(ctx);
      break;
    case "word_cloud":
      body = renderCloud(ctx);
      break;
    default:
      body = "";
  }
  const title = summary.title || summary.id;
  return `<div class="chart ${summary.kind}"${attr("data-component", summary.id)}><h3>${esc(title)}</h3>${body}</div>`;
}

export function counterText(selected: number, total: number): string {
  return `${selected} selected out of ${total} records`;
}

// Full page from the view model. Same inputs give the same markup.
export function renderPage(vm: ViewModel): string {
  const config = vm.config;
  const banner = vm.error ? `<div class="banner error" role="alert">${esc(vm.error)}</div>` : "";
  if (!config || !vm.payload) return banner || `<div class="loading">Loading</div>`;
  const payload = vm.payload;
  const states = new Map(payload.components.map((c) => [c.id, c]));
  const nav =
    `<nav class="navbar"><span class="app-icon">&#9673;</span><h1>${esc(config.title)}</h1>` +
    `<a class="instructions" href="#instructions">Instructions</a></nav>`;
  const counter =
    `<div class="counter"><strong>${payload.counter.selected}</strong> selected out of <strong>${payload.counter.total}</strong> records` +
    ` | <a href="#" data-action="reset">Reset All</a></div>`;

  let map = "";
  const groups = new Map<string, string[]>();
  let table = "";
  for (const summary of config.components) {
    const state = states.get(summary.id);
    if (!state) continue;
    if (summary.kind === "map") {
      map = renderMap({ summary, state, filter: undefined, palette: summary.palette.length ? summary.palette : config.palette, vm });
    } else if (summary.kind === "table") {
      table = renderTable(vm);
    } else {
      const g = summary.group || "";
      if (!groups.has(g)) groups.set(g, []);
      groups.get(g)!.push(renderComponent(vm, summary, state));
    }
  }
  const grid = [...groups.entries()]
    .map(([g, charts]) => {
      if (!g) return `<div class="group">${charts.join("")}</div>`;
      const hidden = vm.ui.collapsed.has(g);
      return (
        `<section class="group collapsible"${attr("data-group", g)}>` +
        `<button class="collapse" data-action="collapse"${attr("data-group", g)}${attr("aria-expanded", String(!hidden))}>${esc(g)}</button>` +
        `<div class="group-body"${hidden ? " hidden" : ""}>${charts.join("")}</div></section>`
      );
    })
    .join("");
  return (
    banner +
    nav +
    counter +
    `<main class="layout"><section class="map-pane">${map}</section>` +
    `<section class="chart-grid">${grid}</section></main>` +
    `<section class="table-pane">${table}</section>`
  );
}
