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


import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { ApiClient, type FetchLike } from "../src/api.js";
import type { SessionCreated, StatePayload } from "../src/types.js";

export interface Call {
  method: string;
  url: string;
  body?: string;
}

export type Handler = (call: Call) => { status: number; body: unknown } | Promise<{ status: number; body: unknown }>;

export function fakeFetch(handler: Handler): { fetch: FetchLike; calls: Call[] } {
  const calls: Call[] = [];
  const fetch: FetchLike = async (url, init) => {
    const call: Call = { method: init?.method ?? "GET", url };
    if (init?.body !== undefined) call.body = init.body;
    calls.push(call);
    const r = await handler(call);
    const text = typeof r.body === "string" ? r.body : JSON.stringify(r.body);
    return {
      status: r.status,
      ok: r.status >= 200 && r.status < 300,
      headers: { get: () => "application/json" },
      text: async () => text,
    };
  };
  return { fetch, calls };
}

export function fixture(name: string): SessionCreated {
  return JSON.parse(readFileSync(join(dirname(fileURLToPath(import.meta.url)), "fixtures", `${name}.json`), "utf8")) as SessionCreated;
}

export function withCounter(state: StatePayload, selected: number, filters: StatePayload["filters"] = {}): StatePayload {
  return { ...state, counter: { ...state.counter, selected }, filters };
}

export function mutations(calls: Call[]): Call[] {
  return calls.filter((c) => c.method === "PUT" || c.method === "DELETE");
}

// Serves one captured session; mutations echo a payload whose counter is
// `selectedAfter` and whose filters reflect the request.
export function sessionServer(created: SessionCreated, selectedAfter = 38) {
  let filters: StatePayload["filters"] = {};
  const table = created.state.components.find((c) => c.kind === "table")!.data;
  const server = fakeFetch((call) => {
    const path = call.url.split("?")[0]!;
    if (call.method === "POST" && path.endsWith("/sessions")) {
      filters = {};
      return { status: 201, body: created };
    }
    if (path.endsWith("/table")) return { status: 200, body: table };
    if (path.endsWith("/clusters")) {
      const map = created.state.components.find((c) => c.kind === "map")!.data;
      return { status: 200, body: { ...(map as object), zoom: Number(/zoom=(\d+)/.exec(call.url)?.[1] ?? 0) } };
    }
    const m = /\/filters(?:\/(.+))?$/.exec(path);
    if (m && call.method === "DELETE") {
      if (m[1]) {
        delete filters[decodeURIComponent(m[1])];
      } else {
        filters = {};
      }
      const n = Object.keys(filters).length ? selectedAfter : created.state.counter.total;
      return { status: 200, body: withCounter(created.state, n, { ...filters }) };
    }
    if (m && call.method === "PUT") {
      filters[decodeURIComponent(m[1]!)] = JSON.parse(call.body!);
      return { status: 200, body: withCounter(created.state, selectedAfter, { ...filters }) };
    }
    if (path.endsWith("/state")) return { status: 200, body: withCounter(created.state, created.state.counter.selected, { ...filters }) };
    return { status: 404, body: { error: "NotFound", message: path } };
  });
  return { ...server, api: new ApiClient("", server.fetch) };
}
