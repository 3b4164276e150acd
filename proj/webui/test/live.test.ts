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


import { spawn, type ChildProcess } from "node:child_process";
import { existsSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import { checkStatePayload } from "../src/types.js";
import { ViewModel } from "../src/viewmodel.js";

const root = join(dirname(fileURLToPath(import.meta.url)), "..", "..");
const cli = process.env.IDWMAP_CLI ?? join(root, "build", "idwmap");
const live = existsSync(cli);

describe.runIf(live)("against the C++ service", () => {
  let server: ChildProcess;
  let base = "";

  beforeAll(async () => {
    const port = 20000 + Math.floor(Math.random() * 20000);
    base = `http://127.0.0.1:${port}`;
    server = spawn(cli, ["serve", "--host", "127.0.0.1", "--port", String(port), "--config", join(root, "apps/trelis/trelis.json")], {
      stdio: "ignore",
    });
    for (let i = 0; i < 100; ++i) {
      try {
        if ((await fetch(`${base}/apps`)).ok) return;
      } catch {
        // not up yet
      }
      await new Promise((r) => setTimeout(r, 50));
    }
    throw new Error("service did not start");
  });

  afterAll(() => {
    server?.kill();
  });

  it("drives a session end to end", async () => {
    const api = new ApiClient(base, (u, i) => fetch(u, i));
    const vm = new ViewModel(api, "trelis");
    await vm.open();
    expect(vm.error).toBeNull();
    expect(vm.payload!.counter).toEqual({ selected: 71, total: 71 });

    await vm.apply({ dimension: "cohort_year", spec: { type: "value_set", values: ["2018", "2019"] } });
    const selected = vm.payload!.counter.selected;
    expect(selected).toBeGreaterThan(0);
    expect(selected).toBeLessThan(71);
    expect(vm.page!.visible).toBe(selected);
    expect(checkStatePayload(await api.state(vm.session))).toBeNull();

    const clusters = await api.clusters(vm.session, 3);
    expect(clusters.clusters.reduce((s, c) => s + c.count, 0)).toBe(selected);

    await vm.reset();
    expect(vm.payload!.counter.selected).toBe(71);

    const err = await api.setFilter(vm.session, "no_such_dimension", { type: "value_set", values: [] }).catch((e: unknown) => e);
    expect((err as ApiError).status).toBe(404);
  });
});
