// Conversation view, polled rather than pushed: the screen re-fetches on
// an interval and re-renders whatever the API returns.

import type { ChatMessage } from "../types.js";
import { escapeHtml } from "./html.js";

export function renderConversation(messages: ChatMessage[], myId: string): string {
  const bubbles = messages
    .map((m) => `
      <li class="chat-bubble ${m.sender_id === myId ? "chat-mine" : "chat-theirs"}">
        ${escapeHtml(m.body)}
      </li>`)
    .join("");
  return `
    <ul class="chat-thread">${bubbles}</ul>
    <form class="chat-compose">
      <input name="body" placeholder="Write a message" autocomplete="off" />
      <button type="submit">Send</button>
    </form>`;
}
