// Shapes of the service's JSON documents, plus guarded parsers.
// The client never derives lattice facts itself: everything rendered
// comes off one of these documents.

export const RELATION_LABELS = [
  "Equivalent",
  "Intent",
  "Extent",
  "Ancestor",
  "Descendant",
  "Similar",
] as const;

export type Relation = (typeof RELATION_LABELS)[number];

export const MODES = ["extensional", "intentional"] as const;

export type Mode = (typeof MODES)[number];

export type ElementKind = "attribute" | "object" | "view";

export interface ElementRow {
  name: string;
  kind: ElementKind;
  agent: string | null;
  relation: Relation;
  similarity: number;
}

export interface CurrentConcept {
  index: number;
  extent: string[];
  intent: string[];
  contingentObjects: string[];
  contingentAttributes: string[];
}

export interface SessionState {
  sessionId: string;
  spaceId: string;
  mode: Mode;
  definition: string[];
  current: CurrentConcept;
  elements: ElementRow[];
  viewsBelow: string[];
}

export interface LatticeDoc {
  concepts: { extent: string[]; intent: string[] }[];
  covers: [number, number][];
  objectLabels: Record<string, number>;
  attributeLabels: Record<string, number>;
  views: Record<string, number>;
}

/** The state document failed validation; rendered as an error banner. */
export class SchemaError extends Error {}

function fail(path: string, want: string): never {
  throw new SchemaError(`state document field ${path}: expected ${want}`);
}

function stringList(value: unknown, path: string): string[] {
  if (!Array.isArray(value) ||
      value.some((x) => typeof x !== "string")) {
    fail(path, "a list of strings");
  }
  return value as string[];
}

function oneOf<T extends string>(value: unknown, choices: readonly T[],
                                 path: string): T {
  if (typeof value !== "string" ||
      !(choices as readonly string[]).includes(value)) {
    fail(path, `one of ${choices.join(", ")}`);
  }
  return value as T;
}

function parseElement(value: unknown, path: string): ElementRow {
  if (typeof value !== "object" || value === null) {
    fail(path, "an object");
  }
  const row = value as Record<string, unknown>;
  if (typeof row.name !== "string") fail(`${path}.name`, "a string");
  if (row.agent !== null && typeof row.agent !== "string") {
    fail(`${path}.agent`, "a string or null");
  }
  if (typeof row.similarity !== "number") {
    fail(`${path}.similarity`, "a number");
  }
  return {
    name: row.name as string,
    kind: oneOf(row.kind, ["attribute", "object", "view"], `${path}.kind`),
    agent: row.agent as string | null,
    relation: oneOf(row.relation, RELATION_LABELS, `${path}.relation`),
    similarity: row.similarity as number,
  };
}

export function parseStateDoc(value: unknown): SessionState {
  if (typeof value !== "object" || value === null) {
    fail("(root)", "an object");
  }
  const doc = value as Record<string, unknown>;
  if (typeof doc.sessionId !== "string") fail("sessionId", "a string");
  if (typeof doc.spaceId !== "string") fail("spaceId", "a string");
  if (typeof doc.current !== "object" || doc.current === null) {
    fail("current", "an object");
  }
  const cur = doc.current as Record<string, unknown>;
  if (typeof cur.index !== "number") fail("current.index", "a number");
  if (!Array.isArray(doc.elements)) fail("elements", "a list");
  return {
    sessionId: doc.sessionId as string,
    spaceId: doc.spaceId as string,
    mode: oneOf(doc.mode, MODES, "mode"),
    definition: stringList(doc.definition, "definition"),
    current: {
      index: cur.index as number,
      extent: stringList(cur.extent, "current.extent"),
      intent: stringList(cur.intent, "current.intent"),
      contingentObjects: stringList(cur.contingentObjects,
                                    "current.contingentObjects"),
      contingentAttributes: stringList(cur.contingentAttributes,
                                       "current.contingentAttributes"),
    },
    elements: doc.elements.map((row, i) =>
      parseElement(row, `elements[${i}]`)),
    viewsBelow: stringList(doc.viewsBelow, "viewsBelow"),
  };
}

/**
 * Client-side check before a view is sent to the service.  Returns an
 * error message, or null when the name is acceptable.
 */
export function viewNameProblem(name: string): string | null {
  if (name.trim() === "") {
    return "view name must not be empty";
  }
  return null;
}
