// Thin fetch client for the browsing service.  Every method returns
// parsed, schema-checked documents; service errors surface as
// ServiceError with the module that raised them.

import { LatticeDoc, SessionState, parseStateDoc } from "./model.js";

export class ServiceError extends Error {
  constructor(message: string, readonly status: number,
              readonly module: string) {
    super(message);
  }
}

async function handle(response: Response): Promise<unknown> {
  if (response.ok) {
    return response.json();
  }
  let message = `${response.status} ${response.statusText}`;
  let module = "service";
  try {
    const body = await response.json();
    if (body && typeof body.detail === "object" && body.detail !== null) {
      message = String(body.detail.error ?? message);
      module = String(body.detail.module ?? module);
    }
  } catch {
    // non-JSON error body; keep the status line
  }
  throw new ServiceError(message, response.status, module);
}

export interface SpaceDocuments {
  ontology: string;
  collection: string;
  dataset: string;
}

export class ServiceClient {
  constructor(readonly baseUrl: string) {}

  private async post(path: string, body: unknown): Promise<unknown> {
    const response = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    return handle(response);
  }

  async registerSpace(docs: SpaceDocuments): Promise<string> {
    const form = new FormData();
    form.append("ontology", new Blob([docs.ontology]), "ontology.xml");
    form.append("collection", new Blob([docs.collection]),
                "collection.xml");
    form.append("dataset", new Blob([docs.dataset]), "dataset.csv");
    const response = await fetch(this.baseUrl + "/spaces", {
      method: "POST",
      body: form,
    });
    const doc = await handle(response) as { spaceId: string };
    return doc.spaceId;
  }

  async openSession(spaceId: string): Promise<string> {
    const doc = await this.post(`/spaces/${spaceId}/sessions`, null) as
      { sessionId: string };
    return doc.sessionId;
  }

  async state(sessionId: string): Promise<SessionState> {
    const response = await fetch(
      `${this.baseUrl}/sessions/${sessionId}/state`);
    return parseStateDoc(await handle(response));
  }

  async meet(sessionId: string, elements: string[]): Promise<SessionState> {
    return parseStateDoc(
      await this.post(`/sessions/${sessionId}/meet`, { elements }));
  }

  async join(sessionId: string, elements: string[]): Promise<SessionState> {
    return parseStateDoc(
      await this.post(`/sessions/${sessionId}/join`, { elements }));
  }

  async createView(sessionId: string, name: string,
                   agent: string): Promise<void> {
    await this.post(`/sessions/${sessionId}/views`, { name, agent });
  }

  async setMode(sessionId: string, mode: string): Promise<SessionState> {
    return parseStateDoc(
      await this.post(`/sessions/${sessionId}/mode`, { mode }));
  }

  async lattice(spaceId: string): Promise<LatticeDoc> {
    const response = await fetch(`${this.baseUrl}/spaces/${spaceId}/lattice`);
    return await handle(response) as LatticeDoc;
  }
}
