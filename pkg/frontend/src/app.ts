// Browser entry point: a hash router over the screen modules plus the
// persistent navigation bar, so every screen is one click from the feed.
// All data flows through the ApiClient; nothing is computed locally.

import { ApiClient } from "./api.js";
import { SessionState, isModerator, signIn, signUp } from "./session.js";
import { toastsFor } from "./toast.js";
import { escapeHtml, errorBanner } from "./render/html.js";
import { renderCommunityList, renderDiscussionList, renderLeaderboard } from "./render/feed.js";
import { renderConversation } from "./render/chat.js";
import { emptyFeed, loadMore, renderFeedModel, type FeedModel } from "./screens/feed.js";
import { answerSurveyFlow, loadSurveyScreen } from "./screens/survey.js";
import { profileScreen } from "./screens/profile.js";
import {
  closeSurveyAction,
  createCommunityAction,
  moderatorConsoleScreen,
  renderActionResult,
} from "./screens/moderator.js";
import { researcherConsoleScreen } from "./screens/researcher.js";

const API_BASE = (window as { RESEARCHNET_API?: string }).RESEARCHNET_API
  ?? "http://127.0.0.1:8000";

const client = new ApiClient(API_BASE);
let session: SessionState | null = null;

const root = () => document.getElementById("app")!;
const toastHost = () => document.getElementById("toasts")!;

function showToasts(lines: string[]): void {
  for (const line of lines) {
    const node = document.createElement("div");
    node.className = "toast";
    node.textContent = line;
    toastHost().appendChild(node);
    setTimeout(() => node.remove(), 4000);
  }
}

function navBar(): string {
  if (!session) return "";
  const mod = isModerator(session)
    ? `<a href="#/mod">Console</a>` : "";
  return `
    <nav class="top-nav">
      <a href="#/feed">Communities</a>
      <a href="#/profile">Profile</a>
      <a href="#/leaderboard">Leaderboard</a>
      ${mod}
      <a href="#/research">Research</a>
      <span class="nav-xp">${session.xp} XP · L${session.level}</span>
    </nav>`;
}

function paint(html: string): void {
  root().innerHTML = navBar() + html;
}

function loginForm(error = ""): string {
  return `
    ${error ? errorBanner(error) : ""}
    <form id="login-form" class="login-form">
      <input name="handle" placeholder="handle" autocomplete="username" />
      <input name="secret" type="password" placeholder="password" />
      <label><input type="checkbox" name="register" /> new account (accepts the terms)</label>
      <button type="submit">Enter</button>
    </form>`;
}

async function route(): Promise<void> {
  const hash = window.location.hash || "#/feed";
  if (!session) {
    paint(loginForm());
    wireLogin();
    return;
  }
  const [, screen, arg] = hash.split("/");
  try {
    switch (screen) {
      case "c": {
        const page = await client.discussions(arg, { limit: 50 });
        paint(renderDiscussionList(page.items));
        break;
      }
      case "d": {
        let model: FeedModel = await loadMore(client, emptyFeed(arg));
        paint(renderFeedModel(model));
        root().querySelector(".feed-more")?.addEventListener("click", async () => {
          model = await loadMore(client, model);
          paint(renderFeedModel(model));
        });
        break;
      }
      case "s": {
        const { survey, html } = await loadSurveyScreen(client, arg);
        paint(html);
        root().querySelectorAll<HTMLButtonElement>(".survey-vote").forEach((button) =>
          button.addEventListener("click", async () => {
            const outcome = await answerSurveyFlow(
              client, session!, survey, Number(button.dataset.option));
            session = outcome.session;
            paint(outcome.html);
            showToasts(outcome.toasts);
          }));
        break;
      }
      case "profile": {
        const result = await profileScreen(client, session);
        if (result.kind === "redirect_login") {
          session = null;
          window.location.hash = "#/login";
          return;
        }
        paint(result.html);
        break;
      }
      case "leaderboard": {
        const page = await client.leaderboard({ limit: 50 });
        paint(renderLeaderboard(page.items, session.user.id));
        break;
      }
      case "chat": {
        const page = await client.conversation(arg, { limit: 50 });
        paint(renderConversation(page.items, session.user.id));
        wireChat(arg);
        break;
      }
      case "mod": {
        const communities = await client.communities({ limit: 50 });
        const surveys = communities.items.length
          ? (await client.surveys(communities.items[0].id)).items
          : [];
        paint(moderatorConsoleScreen(session, communities.items, surveys));
        wireConsole(communities.items[0]?.id);
        break;
      }
      case "research": {
        const result = await researcherConsoleScreen(client);
        paint(result.html);
        break;
      }
      default: {
        const page = await client.communities({ limit: 50 });
        paint(renderCommunityList(page.items));
      }
    }
  } catch (error) {
    paint(errorBanner(error instanceof Error ? error.message : String(error)));
  }
}

function wireLogin(): void {
  document.getElementById("login-form")?.addEventListener("submit", async (event) => {
    event.preventDefault();
    const form = event.target as HTMLFormElement;
    const data = new FormData(form);
    const handle = String(data.get("handle") ?? "");
    const secret = String(data.get("secret") ?? "");
    try {
      session = data.get("register")
        ? await signUp(client, handle, secret)
        : await signIn(client, handle, secret);
      window.location.hash = "#/feed";
      await route();
    } catch (error) {
      paint(loginForm(error instanceof Error ? error.message : String(error)));
      wireLogin();
    }
  });
}

function wireChat(peerId: string): void {
  root().querySelector(".chat-compose")?.addEventListener("submit", async (event) => {
    event.preventDefault();
    const input = root().querySelector<HTMLInputElement>(".chat-compose input")!;
    if (!input.value) return;
    const { gamification } = await client.sendChat(peerId, input.value);
    showToasts(toastsFor(gamification.feedback));
    await route();
  });
}

function wireConsole(defaultCommunityId?: string): void {
  root().querySelector(".console-new-community")?.addEventListener("submit", async (event) => {
    event.preventDefault();
    const input = root().querySelector<HTMLInputElement>(".console-new-community input")!;
    const result = await createCommunityAction(client, input.value);
    root().insertAdjacentHTML("beforeend", renderActionResult(result));
    if (result.ok) await route();
  });
  root().querySelectorAll<HTMLButtonElement>(".act-close-survey").forEach((button) =>
    button.addEventListener("click", async () => {
      const result = await closeSurveyAction(client, button.dataset.survey!);
      root().insertAdjacentHTML("beforeend", renderActionResult(result));
      if (result.ok) await route();
    }));
  void defaultCommunityId;
}

window.addEventListener("hashchange", route);
window.addEventListener("DOMContentLoaded", route);

export { escapeHtml };
