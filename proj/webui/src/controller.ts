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


import {
  brushKeys,
  brushRange,
  filterToView,
  sunburstClick,
  toggleValue,
  wordClick,
} from "./interactions.js";
import { viewBounds } from "./mapview.js";
import { renderPage } from "./render.js";
import { nextPage, prevPage, search, sortBy } from "./table.js";
import { isKeyBin, type GroupResult } from "./types.js";
import type { ViewModel } from "./viewmodel.js";

export interface Controller {
  render(): void;
  detach(): void;
}

// Wires DOM events under `root` to the view model. Every chart interaction
// ends in at most one vm.apply/vm.reset call.
export function attach(root: HTMLElement, vm: ViewModel): Controller {
  let brushStart: { svg: Element; index: number } | null = null;
  let suppressClick = false;

  const render = () => {
    root.innerHTML = renderPage(vm);
    root.querySelectorAll<HTMLElement>("ul.legend").forEach((ul) => {
      ul.scrollTop = vm.ui.legendScroll.get(ul.dataset.component ?? "") ?? 0;
    });
  };

  const summary = (id: string | undefined) => vm.config?.components.find((c) => c.id === id);
  const dimensionOf = (id: string | undefined) => summary(id)?.dimensions[0] ?? "";

  const onClick = (ev: Event) => {
    const target = (ev.target as Element).closest("[data-action]") as HTMLElement | null;
    if (!target) return;
    if (suppressClick) {
      suppressClick = false;
      return;
    }
    const d = target.dataset;
    const dim = dimensionOf(d.component);
    switch (d.action) {
      case "toggle":
        void vm.apply(toggleValue(dim, vm.filterOf(dim), d.key ?? ""));
        break;
      case "path":
        void vm.apply(sunburstClick(dim, vm.filterOf(dim), JSON.parse(d.path ?? "[]") as string[]));
        break;
      case "word":
        void vm.apply(wordClick(dim, vm.filterOf(dim), d.term ?? ""));
        break;
      case "reset":
        ev.preventDefault();
        void vm.reset();
        break;
      case "filter-view":
        void vm.apply(filterToView(d.dimension ?? "", viewBounds(vm.ui.viewport)));
        break;
      case "zoom-in":
        void vm.setZoom(Math.min(18, vm.ui.viewport.zoom + 1));
        break;
      case "zoom-out":
        void vm.setZoom(Math.max(0, vm.ui.viewport.zoom - 1));
        break;
      case "collapse": {
        const g = d.group ?? "";
        if (vm.ui.collapsed.has(g)) {
          vm.ui.collapsed.delete(g);
        } else {
          vm.ui.collapsed.add(g);
        }
        render();
        break;
      }
      case "cluster":
        vm.ui.popup = { cluster: d.cluster ?? "" };
        render();
        break;
      case "sort":
        void vm.setTable(sortBy(vm.table, d.column ?? ""));
        break;
      case "next":
        void vm.setTable(nextPage(vm.table, vm.page?.matched ?? 0));
        break;
      case "prev":
        void vm.setTable(prevPage(vm.table));
        break;
    }
  };

  const indexAt = (ev: Event) => {
    const el = (ev.target as Element).closest("[data-index]") as HTMLElement | null;
    const svg = (ev.target as Element).closest("[data-brush]");
    if (!el || !svg) return null;
    return { svg, index: Number(el.dataset.index) };
  };

  const onDown = (ev: Event) => {
    brushStart = indexAt(ev);
  };

  const onUp = (ev: Event) => {
    const start = brushStart;
    brushStart = null;
    const end = indexAt(ev);
    if (!start || !end || start.svg !== end.svg || start.index === end.index) return;
    suppressClick = true;
    const svg = end.svg as HTMLElement;
    const id = svg.dataset.component;
    const dim = dimensionOf(id);
    const state = vm.payload?.components.find((c) => c.id === id)?.data as GroupResult | undefined;
    if (!state || !id) return;
    if (svg.dataset.brush === "keys") {
      const keys = state.bins.filter(isKeyBin).map((b) => b.key);
      void vm.apply(brushKeys(dim, keys, start.index, end.index));
    } else {
      const bins = state.bins.filter((b) => !isKeyBin(b)) as Array<{ lo: number; hi: number }>;
      const a = bins[Math.min(start.index, end.index)];
      const b = bins[Math.max(start.index, end.index)];
      if (!a || !b) return;
      const brush = brushRange(dim, a.lo, b.hi);
      vm.ui.brush.set(id, brush.focusDomain);
      vm.ui.focus.set(id, brush.focusDomain);
      void vm.apply(brush.mutation);
    }
  };

  const onChange = (ev: Event) => {
    const el = ev.target as HTMLElement;
    if (el.matches("select.basemap")) {
      vm.ui.basemap = Number((el as HTMLSelectElement).value);
      render();
    }
  };

  const onInput = (ev: Event) => {
    const el = ev.target as HTMLElement;
    if (el.matches("input.search")) void vm.setTable(search(vm.table, (el as HTMLInputElement).value));
  };

  const onScroll = (ev: Event) => {
    const el = ev.target as HTMLElement;
    if (el instanceof HTMLElement && el.matches("ul.legend")) vm.ui.legendScroll.set(el.dataset.component ?? "", el.scrollTop);
  };

  root.addEventListener("click", onClick);
  root.addEventListener("mousedown", onDown);
  root.addEventListener("mouseup", onUp);
  root.addEventListener("change", onChange);
  root.addEventListener("input", onInput);
  root.addEventListener("scroll", onScroll, true);
  return {
    render,
    detach() {
      root.removeEventListener("click", onClick);
      root.removeEventListener("mousedown", onDown);
      root.removeEventListener("mouseup", onUp);
      root.removeEventListener("change", onChange);
      root.removeEventListener("input", onInput);
      root.removeEventListener("scroll", onScroll, true);
    },
  };
}
