// Who is signed in and what the server last said about their rewards.
// The XP/level/medal numbers come from the API verbatim; the session
// never derives them from raw activity.

import { ApiClient, ApiError } from "./api.js";
import type { GamificationBlock, MedalChip, UserSummary } from "./types.js";

export interface SessionState {
  token: string;
  user: UserSummary;
  xp: number;
  level: number;
  medals: MedalChip[];
}

export function isModerator(session: SessionState): boolean {
  return session.user.role === "moderator";
}

export async function signIn(
  client: ApiClient,
  handle: string,
  secret: string,
): Promise<SessionState> {
  const auth = await client.login(handle, secret);
  const card = await client.progressCard();
  return {
    token: auth.token,
    user: auth.user,
    xp: card.xp,
    level: card.level,
    medals: card.medals,
  };
}

export async function signUp(
  client: ApiClient,
  handle: string,
  secret: string,
  displayName = "",
): Promise<SessionState> {
  const terms = await client.terms();
  await client.register(handle, secret, terms.version, displayName);
  return signIn(client, handle, secret);
}

// Writes return the actor's fresh totals; fold them into the session so
// the header XP counter is always the server's number.
export function absorbRewards(session: SessionState, block: GamificationBlock): SessionState {
  return { ...session, xp: block.xp, level: block.level };
}

export function isSessionExpired(error: unknown): boolean {
  return error instanceof ApiError && error.status === 401;
}
