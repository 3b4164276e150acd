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


import { ApiError, PayloadError, type ApiClient } from "./api.js";
import type { Mutation } from "./interactions.js";
import { initialTable, tableParams, type TableState } from "./table.js";
import type { ClusterPayload, ConfigSummary, StatePayload, TablePage } from "./types.js";

export interface Viewport {
  lat: number;
  lon: number;
  zoom: number;
  width: number;
  height: number;
}

export interface UiState {
  collapsed: Set<string>;
  legendScroll: Map<string, number>;
  brush: Map<string, [number, number]>;
  focus: Map<string, [number, number]>;
  viewport: Viewport;
  basemap: number;
  popup: { cluster: string } | null;
}

export interface Hooks {
  onChange?: () => void;
  onToast?: (message: string) => void;
}

type Job = { kind: "mutation"; mutation: Mutation } | { kind: "reset" };

export class ViewModel {
  session = "";
  config: ConfigSummary | null = null;
  payload: StatePayload | null = null;
  initial: StatePayload | null = null;
  page: TablePage | null = null;
  // Clusters fetched for the current viewport zoom; null uses the payload's.
  clusters: ClusterPayload | null = null;
  table: TableState = initialTable();
  error: string | null = null;
  ui: UiState = {
    collapsed: new Set(),
    legendScroll: new Map(),
    brush: new Map(),
    focus: new Map(),
    viewport: { lat: 20, lon: 0, zoom: 1, width: 640, height: 400 },
    basemap: 0,
    popup: null,
  };

  private pending: Job[] = [];
  private draining: Promise<void> | null = null;

  constructor(
    private readonly api: ApiClient,
    readonly app: string,
    private readonly hooks: Hooks = {},
  ) {}

  async open(): Promise<void> {
    try {
      const created = await this.api.createSession(this.app);
      this.session = created.session;
      this.config = created.config;
      this.payload = created.state;
      this.initial = created.state;
      this.table = initialTable(this.table.limit);
      const table = created.state.components.find((c) => c.kind === "table");
      this.page = (table?.data as TablePage | undefined) ?? null;
      this.clusters = null;
      this.error = null;
    } catch (e) {
      this.fail(e);
    }
    this.changed();
  }

  // Queues one filter mutation. A queued, not yet sent mutation on the same
  // dimension is replaced, so rapid brushing sends only the latest extent.
  apply(mutation: Mutation): Promise<void> {
    const i = this.pending.findIndex((j) => j.kind === "mutation" && j.mutation.dimension === mutation.dimension);
    if (i >= 0) {
      this.pending[i] = { kind: "mutation", mutation };
    } else {
      this.pending.push({ kind: "mutation", mutation });
    }
    return this.drain();
  }

  reset(): Promise<void> {
    this.pending = [{ kind: "reset" }];
    this.ui.brush.clear();
    this.ui.focus.clear();
    return this.drain();
  }

  async setTable(state: TableState): Promise<void> {
    this.table = state;
    try {
      this.page = await this.api.table(this.session, tableParams(state));
    } catch (e) {
      await this.recover(e);
    }
    this.changed();
  }

  async setZoom(zoom: number): Promise<void> {
    this.ui.viewport = { ...this.ui.viewport, zoom };
    this.ui.popup = null;
    try {
      this.clusters = await this.api.clusters(this.session, zoom);
    } catch (e) {
      await this.recover(e);
    }
    this.changed();
  }

  filterOf(dimension: string) {
    return this.payload?.filters[dimension];
  }

  private drain(): Promise<void> {
    if (!this.draining) {
      this.draining = (async () => {
        while (this.pending.length) {
          const job = this.pending.shift()!;
          await this.run(job);
        }
        this.draining = null;
      })();
    }
    return this.draining;
  }

  private async run(job: Job): Promise<void> {
    try {
      let state: StatePayload;
      if (job.kind === "reset") {
        state = await this.api.resetAll(this.session);
      } else if (job.mutation.spec === null) {
        state = await this.api.clearFilter(this.session, job.mutation.dimension);
      } else {
        state = await this.api.setFilter(this.session, job.mutation.dimension, job.mutation.spec);
      }
      this.payload = state;
      this.error = null;
      this.table = { ...this.table, offset: 0 };
      this.page = await this.api.table(this.session, tableParams(this.table));
      if (this.clusters) this.clusters = await this.api.clusters(this.session, this.ui.viewport.zoom);
    } catch (e) {
      await this.recover(e);
    }
    this.changed();
  }

  private async recover(e: unknown): Promise<void> {
    if (e instanceof ApiError && e.expired) {
      this.hooks.onToast?.("Session expired; starting a new one.");
      this.pending = [];
      await this.open();
      return;
    }
    this.fail(e);
  }

  private fail(e: unknown): void {
    if (e instanceof PayloadError) {
      this.error = `Unexpected response: ${e.message}`;
    } else if (e instanceof ApiError) {
      this.hooks.onToast?.(`${e.code}: ${e.message}`);
    } else {
      this.error = e instanceof Error ? e.message : String(e);
    }
  }

  private changed(): void {
    this.hooks.onChange?.();
  }
}
