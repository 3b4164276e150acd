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


import { ApiClient } from "./api.js";
import { attach } from "./controller.js";
import { ViewModel } from "./viewmodel.js";

async function main(): Promise<void> {
  const root = document.getElementById("app");
  const toast = document.getElementById("toast");
  if (!root) return;
  const api = new ApiClient("", (input, init) => fetch(input, init));
  let app = new URLSearchParams(location.search).get("app");
  if (!app) {
    const apps = await api.listApps();
    if (apps.length !== 1) {
      root.innerHTML = apps.map((a) => `<p><a href="?app=${encodeURIComponent(a.name)}">${a.title}</a></p>`).join("");
      return;
    }
    app = apps[0]!.name;
  }
  let controller: { render(): void } | null = null;
  const vm = new ViewModel(api, app, {
    onChange: () => controller?.render(),
    onToast: (message) => {
      if (!toast) return;
      toast.textContent = message;
      toast.hidden = false;
      setTimeout(() => (toast.hidden = true), 4000);
    },
  });
  controller = attach(root, vm);
  await vm.open();
  document.title = vm.config?.title ?? app;
}

void main();
