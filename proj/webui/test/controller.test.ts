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

// @vitest-environment jsdom

import { describe, expect, it } from "vitest";

import { attach } from "../src/controller.js";
import type { SessionCreated } from "../src/types.js";
import { ViewModel } from "../src/viewmodel.js";
import { fixture, mutations, sessionServer } from "./helpers.js";

async function setup(created: SessionCreated) {
  const server = sessionServer(created);
  const root = document.createElement("div");
  document.body.appendChild(root);
  let ctl: { render(): void } | null = null;
  const vm = new ViewModel(server.api, created.config.name, { onChange: () => ctl?.render() });
  ctl = attach(root, vm);
  await vm.open();
  return { server, root, vm };
}

const settle = () => new Promise((r) => setTimeout(r, 0));

function fire(el: Element, type: string) {
  el.dispatchEvent(new MouseEvent(type, { bubbles: true }));
}

describe("controller", () => {
  it("brushing 2018 to 2019 sends one value_set and redraws", async () => {
    const { server, root } = await setup(fixture("trelis_session"));
    const bars = root.querySelectorAll('.chart[data-component="cohort_year"] g[data-index]');
    fire(bars[0]!.querySelector("rect")!, "mousedown");
    fire(bars[1]!.querySelector("rect")!, "mouseup");
    fire(bars[1]!.querySelector("rect")!, "click");
    await settle();
    const m = mutations(server.calls);
    expect(m).toHaveLength(1);
    expect(m[0]!.url).toMatch(/\/filters\/cohort_year$/);
    expect(JSON.parse(m[0]!.body!)).toEqual({ type: "value_set", values: ["2018", "2019"] });
    expect(root.querySelector(".counter")!.textContent).toBe("38 selected out of 71 records | Reset All");
  });

  it("each click issues at most one mutation", async () => {
    const { server, root } = await setup(fixture("trelis_session"));
    const targets = [
      '.chart.donut path[data-action="toggle"]',
      '.chart.donut li[data-action="toggle"]',
      '.chart.row g[data-action="toggle"]',
      '.chart.row_xscroll g[data-action="toggle"]',
      'path[data-action="path"]',
      'text[data-action="word"]',
      'button[data-action="filter-view"]',
    ];
    for (const sel of targets) {
      const before = mutations(server.calls).length;
      const el = root.querySelector(sel);
      expect(el, sel).not.toBeNull();
      fire(el!, "click");
      await settle();
      expect(mutations(server.calls).length - before, sel).toBe(1);
    }
    for (const sel of ['button[data-action="zoom-in"]', 'th[data-action="sort"]', 'button[data-action="next"]']) {
      const before = mutations(server.calls).length;
      fire(root.querySelector(sel)!, "click");
      await settle();
      expect(mutations(server.calls).length - before, sel).toBe(0);
    }
  });

  it("sunburst and word clicks send the right specs", async () => {
    const { server, root } = await setup(fixture("trelis_session"));
    const slice = root.querySelector('path[data-action="path"]')!;
    fire(slice, "click");
    await settle();
    const path = JSON.parse(slice.getAttribute("data-path")!);
    expect(JSON.parse(mutations(server.calls).at(-1)!.body!)).toEqual({ type: "path_prefix", path });
    const word = root.querySelector('text[data-action="word"]')!;
    fire(word, "click");
    await settle();
    expect(JSON.parse(mutations(server.calls).at(-1)!.body!)).toEqual({ type: "term", term: word.getAttribute("data-term") });
  });

  it("Reset All issues DELETE /filters and restores the initial view", async () => {
    const { server, root, vm } = await setup(fixture("trelis_session"));
    const initial = root.innerHTML;
    fire(root.querySelector('.chart.donut li[data-action="toggle"]')!, "click");
    await settle();
    expect(root.innerHTML).not.toBe(initial);
    fire(root.querySelector('[data-action="reset"]')!, "click");
    await settle();
    const last = mutations(server.calls).at(-1)!;
    expect(`${last.method} ${last.url}`).toMatch(/^DELETE \/sessions\/[0-9a-f]+\/filters$/);
    expect(vm.payload).toEqual(vm.initial);
    expect(root.innerHTML).toBe(initial);
  });

  it("zoom-chart brush sets the focus domain and a range filter", async () => {
    const created = fixture("trelis_session");
    created.config.components.push({
      id: "score", kind: "line_zoom_focus", title: "Score", dimensions: ["score"], brushing: true, k: 0, popup: "", palette: [], group: "",
    });
    created.state.components.push({
      id: "score",
      kind: "line_zoom_focus",
      dimensions: ["score"],
      data: { dimension: "score", exclusion: "score", bins: Array.from({ length: 10 }, (_, i) => ({ lo: i * 10, hi: i * 10 + 10, value: i })) },
    });
    const { server, root } = await setup(created);
    const bins = root.querySelectorAll('.chart[data-component="score"] rect.bin');
    fire(bins[9]!, "mousedown");
    fire(bins[9]!, "mouseup");
    fire(bins[9]!, "mousedown");
    fire(bins[8]!, "mouseup");
    await settle();
    const m = mutations(server.calls);
    expect(m).toHaveLength(1);
    expect(JSON.parse(m[0]!.body!)).toEqual({ type: "range", lo: 80, hi: 100 });
    expect(root.querySelector('.chart[data-component="score"] svg.focus')!.getAttribute("data-domain")).toBe("80,100");
  });

  it("collapsible groups toggle without a request", async () => {
    const { server, root } = await setup(fixture("university_session"));
    const button = root.querySelector('button[data-action="collapse"]')!;
    const group = button.getAttribute("data-group");
    const calls = server.calls.length;
    fire(button, "click");
    expect((root.querySelector(`section[data-group="${group}"] .group-body`) as HTMLElement).hidden).toBe(true);
    fire(root.querySelector('button[data-action="collapse"]')!, "click");
    expect((root.querySelector(`section[data-group="${group}"] .group-body`) as HTMLElement).hidden).toBe(false);
    expect(server.calls.length).toBe(calls);
  });

  it("search and paging query the table only", async () => {
    const { server, root } = await setup(fixture("trelis_session"));
    const input = root.querySelector("input.search") as HTMLInputElement;
    input.value = "aalborg";
    input.dispatchEvent(new Event("input", { bubbles: true }));
    await settle();
    expect(server.calls.at(-1)!.url).toMatch(/\/table\?offset=0&limit=10&dir=asc&search=aalborg$/);
    fire(root.querySelector('button[data-action="next"]')!, "click");
    await settle();
    expect(server.calls.at(-1)!.url).toMatch(/offset=10/);
    expect(mutations(server.calls)).toHaveLength(0);
    expect(root.querySelector(".counter")!.textContent).toMatch(/^71 selected/);
  });

  it("zoom buttons fetch clusters for the new zoom", async () => {
    const { server, root, vm } = await setup(fixture("trelis_session"));
    const zoom = vm.ui.viewport.zoom;
    fire(root.querySelector('button[data-action="zoom-in"]')!, "click");
    await settle();
    expect(server.calls.at(-1)!.url).toMatch(new RegExp(`/clusters\\?zoom=${zoom + 1}$`));
    expect(vm.clusters!.zoom).toBe(zoom + 1);
    expect(mutations(server.calls)).toHaveLength(0);
  });

  it("basemap toggle and cluster popups are local", async () => {
    const { server, root, vm } = await setup(fixture("trelis_session"));
    const calls = server.calls.length;
    const select = root.querySelector("select.basemap") as HTMLSelectElement;
    select.value = "1";
    select.dispatchEvent(new Event("change", { bubbles: true }));
    expect(vm.ui.basemap).toBe(1);
    fire(root.querySelector('g[data-action="cluster"]')!, "click");
    expect(root.querySelector(".popup-box")).not.toBeNull();
    expect(server.calls.length).toBe(calls);
  });
});
