// Pure state-document rendering.  A pane model is plain data ready
// for the DOM layer; building it must not compute anything the
// service did not already say.

import {
  ElementRow,
  Mode,
  SchemaError,
  SessionState,
} from "./model.js";

export interface GlobalRow {
  name: string;
  kind: string;
  /** the defining agent for a view, blank for scale attributes */
  type: string;
  relation: string;
  similarity: number;
}

export interface LocalPane {
  /** objects filed exactly at the current concept */
  objects: string[];
  /** the full extent, inherited objects included */
  extent: string[];
  /** views strictly below the current concept */
  views: string[];
}

export interface PaneModel {
  mode: Mode;
  /** elements whose meet/join defines the current concept */
  definition: string[];
  global: GlobalRow[];
  local: LocalPane;
  conceptIndex: number;
  intent: string[];
}

function globalRow(row: ElementRow): GlobalRow {
  return {
    name: row.name,
    kind: row.kind,
    type: row.agent ?? "",
    relation: row.relation,
    similarity: row.similarity,
  };
}

export function renderState(state: SessionState): PaneModel {
  // the global display lists view and attribute concepts; objects
  // belong to the local pane via the extent
  const global = state.elements
    .filter((row) => row.kind !== "object")
    .map(globalRow);
  return {
    mode: state.mode,
    definition: [...state.definition],
    global,
    local: {
      objects: [...state.current.contingentObjects],
      extent: [...state.current.extent],
      views: [...state.viewsBelow],
    },
    conceptIndex: state.current.index,
    intent: [...state.current.intent],
  };
}

/** One line per row, padded columns; used for text dumps and tests. */
export function globalPaneText(pane: PaneModel): string {
  const header = ["name", "kind", "type", "relation", "sim"];
  const rows = pane.global.map((r) => [
    r.name, r.kind, r.type, r.relation, String(r.similarity),
  ]);
  const widths = header.map((h, i) =>
    Math.max(h.length, ...rows.map((r) => (r[i] ?? "").length)));
  const line = (cells: string[]) =>
    cells.map((c, i) => c.padEnd(widths[i] ?? 0)).join("  ").trimEnd();
  return [line(header), ...rows.map(line)].join("\n");
}

export function bannerText(err: unknown): string {
  if (err instanceof SchemaError) {
    return `unexpected service response: ${err.message}`;
  }
  if (err instanceof Error) {
    return err.message;
  }
  return String(err);
}
