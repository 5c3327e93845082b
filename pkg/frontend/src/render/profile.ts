// Profile screen: XP total, the level bar, and the medal case. All
// numbers are rendered exactly as the progress card delivered them;
// the bar width is the server's xp_into_level over level_span.

import type { ProgressCard, UserSummary } from "../types.js";
import { escapeHtml, percent } from "./html.js";

export function renderMedals(medals: ProgressCard["medals"]): string {
  if (medals.length === 0) {
    return `<p class="medal-case medal-case-empty">No medals yet</p>`;
  }
  const chips = medals
    .map((m) => `<li class="medal" data-index="${m.index}">${escapeHtml(m.name)}</li>`)
    .join("");
  return `<ul class="medal-case">${chips}</ul>`;
}

export function renderLevelBar(card: ProgressCard): string {
  if (card.level_span === null || card.next_level_xp === null) {
    return `<div class="level-bar level-bar-maxed">Max level</div>`;
  }
  const width = percent(card.xp_into_level / card.level_span);
  return `
    <div class="level-bar" role="progressbar"
         aria-valuenow="${card.xp_into_level}" aria-valuemax="${card.level_span}">
      <div class="level-bar-fill" style="width: ${width}"></div>
      <span class="level-bar-label">${card.xp_into_level}/${card.level_span} to level ${card.level + 1}</span>
    </div>`;
}

export function renderProfile(user: UserSummary, card: ProgressCard): string {
  const missions = card.missions
    .map((m) => `
      <li class="mission${m.granted ? " mission-done" : ""}">
        ${escapeHtml(m.mission_id)}: ${m.count}${m.granted ? " ✓" : ""}
      </li>`)
    .join("");
  return `
    <section class="profile-screen">
      <header class="profile-header">
        <h2>${escapeHtml(user.display_name)} <small>@${escapeHtml(user.handle)}</small></h2>
        <p class="profile-bio">${escapeHtml(user.bio)}</p>
      </header>
      <div class="profile-progress">
        <span class="profile-xp">${card.xp} XP</span>
        <span class="profile-level">Level ${card.level}</span>
        ${renderLevelBar(card)}
      </div>
      ${renderMedals(card.medals)}
      <ul class="mission-list">${missions}</ul>
    </section>`;
}
