// DOM wiring for index.html.  All lattice knowledge lives on the
// server; this file only moves pane models into tables.

import { ServiceClient } from "./api.js";
import { BrowserController } from "./controller.js";
import { bannerText } from "./render.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function clear(node: HTMLElement): void {
  while (node.firstChild) {
    node.removeChild(node.firstChild);
  }
}

function cell(row: HTMLTableRowElement, text: string): void {
  const td = row.insertCell();
  td.textContent = text;
}

let controller: BrowserController | null = null;

function redraw(): void {
  const bannerBox = el<HTMLDivElement>("banner");
  if (controller === null || controller.banner !== null) {
    bannerBox.textContent = controller?.banner ?? "";
    bannerBox.hidden = controller === null || controller.banner === null;
  } else {
    bannerBox.hidden = true;
  }
  const panes = controller?.panes() ?? null;
  if (panes === null) {
    return;
  }

  el<HTMLSpanElement>("mode").textContent = panes.mode;
  el<HTMLSpanElement>("definition").textContent =
    panes.definition.length > 0 ? panes.definition.join(", ") : "(top)";
  el<HTMLSpanElement>("intent").textContent = panes.intent.join(", ");

  const globalBody = el<HTMLTableSectionElement>("global-body");
  clear(globalBody);
  for (const row of panes.global) {
    const tr = globalBody.insertRow();
    const pick = tr.insertCell();
    const box = document.createElement("input");
    box.type = "checkbox";
    box.checked = controller!.selected.has(row.name);
    box.addEventListener("change", () => {
      if (box.checked) {
        controller!.selected.add(row.name);
      } else {
        controller!.selected.delete(row.name);
      }
    });
    pick.appendChild(box);
    cell(tr, row.name);
    cell(tr, row.kind);
    cell(tr, row.type);
    cell(tr, row.relation);
    cell(tr, String(row.similarity));
  }

  const objects = el<HTMLUListElement>("local-objects");
  clear(objects);
  for (const name of panes.local.extent) {
    const li = document.createElement("li");
    li.textContent = panes.local.objects.includes(name)
      ? `${name} *` : name;
    objects.appendChild(li);
  }
  const views = el<HTMLUListElement>("local-views");
  clear(views);
  for (const name of panes.local.views) {
    const li = document.createElement("li");
    li.textContent = `${name} (view)`;
    views.appendChild(li);
  }
}

async function connect(): Promise<void> {
  const base = el<HTMLInputElement>("base-url").value.replace(/\/+$/, "");
  const client = new ServiceClient(base);
  const read = async (id: string): Promise<string> => {
    const file = el<HTMLInputElement>(id).files?.[0];
    if (!file) {
      throw new Error("choose all three documents first");
    }
    return file.text();
  };
  try {
    const spaceId = await client.registerSpace({
      ontology: await read("ontology-file"),
      collection: await read("collection-file"),
      dataset: await read("dataset-file"),
    });
    const sessionId = await client.openSession(spaceId);
    controller = new BrowserController(client, sessionId);
    await controller.refresh();
    el<HTMLDivElement>("setup").hidden = true;
    el<HTMLDivElement>("browser").hidden = false;
  } catch (err) {
    const bannerBox = el<HTMLDivElement>("banner");
    bannerBox.textContent = bannerText(err);
    bannerBox.hidden = false;
  }
  redraw();
}

function wire(): void {
  el<HTMLButtonElement>("connect").addEventListener("click", () => {
    void connect();
  });
  el<HTMLButtonElement>("meet").addEventListener("click", async () => {
    await controller?.meetSelected();
    redraw();
  });
  el<HTMLButtonElement>("join").addEventListener("click", async () => {
    await controller?.joinSelected();
    redraw();
  });
  el<HTMLButtonElement>("bookmark").addEventListener("click", async () => {
    const name = el<HTMLInputElement>("view-name").value;
    if (await controller?.bookmark(name)) {
      el<HTMLInputElement>("view-name").value = "";
    }
    redraw();
  });
  el<HTMLButtonElement>("toggle-mode").addEventListener(
    "click", async () => {
      await controller?.toggleMode();
      redraw();
    });
}

document.addEventListener("DOMContentLoaded", wire);
