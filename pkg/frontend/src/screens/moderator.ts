// Moderator console: community/survey management behind a client-side
// role gate. The gate mirrors the server's rules for honest navigation;
// the API still enforces them (an ordinary user would get 403s anyway).

import { ApiClient, ApiError } from "../api.js";
import type { SessionState } from "../session.js";
import { isModerator } from "../session.js";
import { escapeHtml, errorBanner } from "../render/html.js";
import type { Community, Survey } from "../types.js";

export interface ConsoleAction {
  ok: boolean;
  message: string;
}

export function renderRoleDenied(): string {
  return `
    <section class="role-denied">
      <h2>Moderators only</h2>
      <p>This console manages communities and surveys. Your account has no
         moderator role, so there is nothing for you here.</p>
      <a href="#/feed">Back to the feed</a>
    </section>`;
}

export function renderConsole(communities: Community[], surveys: Survey[]): string {
  const communityRows = communities
    .map((c) => `<li>${escapeHtml(c.title)}</li>`)
    .join("");
  const surveyRows = surveys
    .map((s) => `
      <li class="console-survey" data-survey="${s.id}">
        ${escapeHtml(s.question)}
        <span class="survey-status survey-status-${s.status}">${s.status}</span>
        ${s.status === "open" ? `<button class="act-close-survey" data-survey="${s.id}">close</button>` : ""}
      </li>`)
    .join("");
  return `
    <section class="moderator-console">
      <h2>Moderator console</h2>
      <form class="console-new-community">
        <input name="title" placeholder="New community title" />
        <button type="submit">Create community</button>
      </form>
      <ul class="console-communities">${communityRows}</ul>
      <form class="console-new-survey">
        <input name="question" placeholder="Survey question" />
        <input name="options" placeholder="Options, comma-separated" />
        <button type="submit">Create survey</button>
      </form>
      <ul class="console-surveys">${surveyRows}</ul>
    </section>`;
}

export function moderatorConsoleScreen(
  session: SessionState,
  communities: Community[],
  surveys: Survey[],
): string {
  if (!isModerator(session)) return renderRoleDenied();
  return renderConsole(communities, surveys);
}

// Actions surface API errors verbatim so the moderator sees exactly what
// the server rejected.
async function run(action: () => Promise<string>): Promise<ConsoleAction> {
  try {
    return { ok: true, message: await action() };
  } catch (error) {
    if (error instanceof ApiError) return { ok: false, message: error.detail };
    throw error;
  }
}

export function createCommunityAction(client: ApiClient, title: string): Promise<ConsoleAction> {
  return run(async () => {
    const { community } = await client.createCommunity(title);
    return `Community "${community.title}" created`;
  });
}

export function createSurveyAction(
  client: ApiClient,
  communityId: string,
  question: string,
  options: string[],
): Promise<ConsoleAction> {
  return run(async () => {
    const { survey } = await client.createSurvey(communityId, question, options);
    return `Survey "${survey.question}" is open`;
  });
}

export function closeSurveyAction(client: ApiClient, surveyId: string): Promise<ConsoleAction> {
  return run(async () => {
    const { survey } = await client.closeSurvey(surveyId);
    return `Survey "${survey.question}" closed`;
  });
}

export function hidePostAction(client: ApiClient, postId: string): Promise<ConsoleAction> {
  return run(async () => {
    await client.hidePost(postId);
    return "Post hidden";
  });
}

export function renderActionResult(result: ConsoleAction): string {
  return result.ok
    ? `<p class="console-ok">${escapeHtml(result.message)}</p>`
    : errorBanner(result.message);
}
