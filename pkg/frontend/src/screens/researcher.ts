// Researcher console: export downloads for grant holders. The server is
// the gate; this screen just renders the denial it returns.

import { ApiClient, ApiError } from "../api.js";
import { errorBanner } from "../render/html.js";

export type ResearcherScreen =
  | { kind: "console"; html: string }
  | { kind: "denied"; html: string };

export function renderResearcherConsole(): string {
  return `
    <section class="researcher-console">
      <h2>Research exports</h2>
      <ul class="export-list">
        <li><button class="act-export" data-export="events">Event ledger (NDJSON)</button></li>
        <li><button class="act-export" data-export="users">User table (CSV)</button></li>
        <li><button class="act-export" data-export="graph">Social graph (TSV)</button></li>
        <li><button class="act-export" data-export="metrics">Network metrics</button></li>
      </ul>
      <pre class="export-preview"></pre>
    </section>`;
}

export async function researcherConsoleScreen(client: ApiClient): Promise<ResearcherScreen> {
  try {
    // probe with the cheapest export; an inactive grant fails here
    await client.metrics();
    return { kind: "console", html: renderResearcherConsole() };
  } catch (error) {
    if (error instanceof ApiError && error.status === 403) {
      return { kind: "denied", html: errorBanner(error.detail) };
    }
    throw error;
  }
}
