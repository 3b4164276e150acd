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
  checkStatePayload,
  type AppListing,
  type ClusterPayload,
  type FilterSpec,
  type SessionCreated,
  type StatePayload,
  type TablePage,
  type TermCount,
} from "./types.js";

export type FetchLike = (input: string, init?: { method?: string; body?: string; headers?: Record<string, string> }) => Promise<{
  status: number;
  ok: boolean;
  headers: { get(name: string): string | null };
  text(): Promise<string>;
}>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }

  get expired(): boolean {
    return this.status === 410;
  }
}

export class PayloadError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "PayloadError";
  }
}

export interface TableParams {
  offset?: number;
  limit?: number;
  sort?: string;
  dir?: "asc" | "desc";
  search?: string;
}

export interface BBox {
  min_lat: number;
  min_lon: number;
  max_lat: number;
  max_lon: number;
}

export function queryString(params: Record<string, string | number | undefined>): string {
  const parts: string[] = [];
  for (const [k, v] of Object.entries(params)) {
    if (v === undefined || v === "") continue;
    parts.push(`${encodeURIComponent(k)}=${encodeURIComponent(String(v))}`);
  }
  return parts.length ? `?${parts.join("&")}` : "";
}

// One method per service route.
export class ApiClient {
  constructor(
    private readonly base: string,
    private readonly fetcher: FetchLike,
  ) {}

  listApps(): Promise<AppListing[]> {
    return this.call("GET", "/apps");
  }

  async createSession(app: string): Promise<SessionCreated> {
    const created = await this.call<SessionCreated>("POST", `/apps/${encodeURIComponent(app)}/sessions`);
    this.check(created.state);
    return created;
  }

  async state(session: string): Promise<StatePayload> {
    return this.check(await this.call("GET", `/sessions/${session}/state`));
  }

  async setFilter(session: string, dimension: string, spec: FilterSpec): Promise<StatePayload> {
    const path = `/sessions/${session}/filters/${encodeURIComponent(dimension)}`;
    return this.check(await this.call("PUT", path, JSON.stringify(spec)));
  }

  async clearFilter(session: string, dimension: string): Promise<StatePayload> {
    return this.check(await this.call("DELETE", `/sessions/${session}/filters/${encodeURIComponent(dimension)}`));
  }

  async resetAll(session: string): Promise<StatePayload> {
    return this.check(await this.call("DELETE", `/sessions/${session}/filters`));
  }

  table(session: string, params: TableParams): Promise<TablePage> {
    return this.call("GET", `/sessions/${session}/table${queryString({ ...params })}`);
  }

  clusters(session: string, zoom: number, bbox?: BBox): Promise<ClusterPayload> {
    const box = bbox ? `${bbox.min_lat},${bbox.min_lon},${bbox.max_lat},${bbox.max_lon}` : undefined;
    return this.call("GET", `/sessions/${session}/clusters${queryString({ zoom, bbox: box })}`);
  }

  terms(session: string, k: number): Promise<TermCount[]> {
    return this.call("GET", `/sessions/${session}/terms${queryString({ k })}`);
  }

  exportUrl(session: string): string {
    return `${this.base}/sessions/${session}/export.csv`;
  }

  private check(payload: unknown): StatePayload {
    const problem = checkStatePayload(payload);
    if (problem) throw new PayloadError(problem);
    return payload as StatePayload;
  }

  private async call<T>(method: string, path: string, body?: string): Promise<T> {
    const init: { method: string; body?: string; headers?: Record<string, string> } = { method };
    if (body !== undefined) {
      init.body = body;
      init.headers = { "Content-Type": "application/json" };
    }
    const res = await this.fetcher(`${this.base}${path}`, init);
    const text = await res.text();
    let parsed: unknown;
    try {
      parsed = text ? JSON.parse(text) : null;
    } catch {
      throw new ApiError(res.status, "MalformedResponse", `non-JSON response from ${path}`);
    }
    if (!res.ok) {
      const err = (parsed ?? {}) as { error?: string; message?: string };
      throw new ApiError(res.status, err.error ?? "HttpError", err.message ?? `HTTP ${res.status}`);
    }
    return parsed as T;
  }
}
