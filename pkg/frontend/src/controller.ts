// Session controller: owns the last received state document and the
// error banner.  Every operation either replaces the document with
// the service's answer or leaves it untouched and sets the banner,
// so a failed call never changes what is on screen.

import { ServiceClient } from "./api.js";
import { SessionState, viewNameProblem } from "./model.js";
import { PaneModel, bannerText, renderState } from "./render.js";

export class BrowserController {
  lastState: SessionState | null = null;
  banner: string | null = null;
  readonly selected = new Set<string>();

  constructor(readonly client: ServiceClient,
              readonly sessionId: string,
              readonly agent: string = "browser") {}

  panes(): PaneModel | null {
    return this.lastState === null ? null : renderState(this.lastState);
  }

  private async apply(op: () => Promise<SessionState>): Promise<boolean> {
    try {
      this.lastState = await op();
      this.banner = null;
      return true;
    } catch (err) {
      this.banner = bannerText(err);
      return false;
    }
  }

  refresh(): Promise<boolean> {
    return this.apply(() => this.client.state(this.sessionId));
  }

  async meetSelected(): Promise<boolean> {
    return this.transition((names) =>
      this.client.meet(this.sessionId, names));
  }

  async joinSelected(): Promise<boolean> {
    return this.transition((names) =>
      this.client.join(this.sessionId, names));
  }

  private async transition(
      op: (names: string[]) => Promise<SessionState>): Promise<boolean> {
    if (this.selected.size === 0) {
      this.banner = "select at least one element first";
      return false;
    }
    const names = [...this.selected];
    const moved = await this.apply(() => op(names));
    if (moved) {
      this.selected.clear();
    }
    return moved;
  }

  async bookmark(name: string): Promise<boolean> {
    const problem = viewNameProblem(name);
    if (problem !== null) {
      this.banner = problem;
      return false;
    }
    try {
      await this.client.createView(this.sessionId, name, this.agent);
    } catch (err) {
      this.banner = bannerText(err);
      return false;
    }
    return this.refresh();
  }

  async toggleMode(): Promise<boolean> {
    if (this.lastState === null) {
      this.banner = "no session state yet";
      return false;
    }
    const next = this.lastState.mode === "extensional"
      ? "intentional" : "extensional";
    return this.apply(() => this.client.setMode(this.sessionId, next));
  }
}
