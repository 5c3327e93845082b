// Profile screen loader: fetch the card, render it, and bounce expired
// sessions back to the login screen.

import { ApiClient } from "../api.js";
import type { SessionState } from "../session.js";
import { isSessionExpired } from "../session.js";
import { renderProfile } from "../render/profile.js";
import type { ProgressCard } from "../types.js";

export type ProfileScreen =
  | { kind: "profile"; card: ProgressCard; html: string }
  | { kind: "redirect_login" };

export async function profileScreen(
  client: ApiClient,
  session: SessionState,
): Promise<ProfileScreen> {
  try {
    const card = await client.progressCard();
    return { kind: "profile", card, html: renderProfile(session.user, card) };
  } catch (error) {
    if (isSessionExpired(error)) return { kind: "redirect_login" };
    throw error;
  }
}
