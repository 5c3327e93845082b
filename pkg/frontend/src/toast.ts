// Feedback events arrive with every rewarded write; each becomes one
// toast line, in the server's order (XP first, then missions, then
// level-up/medal pairs).

import type { FeedbackEvent } from "./types.js";

export function toastText(event: FeedbackEvent): string {
  switch (event.kind) {
    case "xp_gained":
      return `+${event.value} XP`;
    case "mission_completed":
      return `Mission complete: ${event.value}`;
    case "level_up":
      return `Level ${event.value} reached!`;
    case "medal_unlocked":
      return `Medal unlocked: ${event.medal_name ?? `#${event.value}`}`;
  }
}

export function toastsFor(feedback: FeedbackEvent[]): string[] {
  return feedback.map(toastText);
}
