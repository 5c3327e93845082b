// Feed cards: posts and shares interleaved newest-first, exactly as the
// API pages them. Hidden posts arrive pre-masked; the card just says so.

import type { Community, Discussion, FeedItem, LeaderboardRow, Post } from "../types.js";
import { escapeHtml } from "./html.js";

function attachmentChip(post: Post): string {
  if (!post.attachment) return "";
  const a = post.attachment;
  return `<a class="attachment attachment-${a.kind}" href="${escapeHtml(a.content_ref)}">${a.kind}</a>`;
}

export function renderFeedItem(item: FeedItem): string {
  if (item.kind === "share") {
    return `
      <article class="card share-card" data-id="${item.id}">
        <p class="share-note">shared a post</p>
        <a class="share-link" href="#/post/${item.post_id}">view original</a>
      </article>`;
  }
  if (item.hidden) {
    return `
      <article class="card post-card post-hidden" data-id="${item.id}">
        <p class="hidden-note">This post was hidden by a moderator.</p>
      </article>`;
  }
  return `
    <article class="card post-card" data-id="${item.id}">
      <p class="post-body">${escapeHtml(item.body)}</p>
      ${attachmentChip(item)}
      <footer class="card-actions">
        <button class="act-like" data-post="${item.id}">like</button>
        <button class="act-comment" data-post="${item.id}">comment</button>
        <button class="act-share" data-post="${item.id}">share</button>
      </footer>
    </article>`;
}

export function renderFeed(items: FeedItem[], hasMore: boolean): string {
  const cards = items.map(renderFeedItem).join("");
  const more = hasMore
    ? `<button class="feed-more">Load more</button>`
    : `<p class="feed-end">You're all caught up.</p>`;
  return `<div class="feed">${cards}${more}</div>`;
}

export function renderCommunityList(communities: Community[]): string {
  const rows = communities
    .map((c) => `
      <li class="community-row">
        <a href="#/c/${c.id}">${escapeHtml(c.title)}</a>
        <span class="community-desc">${escapeHtml(c.description)}</span>
      </li>`)
    .join("");
  return `<ul class="community-list">${rows}</ul>`;
}

export function renderDiscussionList(discussions: Discussion[]): string {
  const rows = discussions
    .map((d) => `<li><a href="#/d/${d.id}">${escapeHtml(d.title)}</a></li>`)
    .join("");
  return `<ul class="discussion-list">${rows}</ul>`;
}

export function renderLeaderboard(rows: LeaderboardRow[], currentUserId: string): string {
  const body = rows
    .map((row) => `
      <tr class="${row.user_id === currentUserId ? "leaderboard-you" : ""}">
        <td>${row.rank}</td>
        <td>${escapeHtml(row.handle)}</td>
        <td>${row.xp}</td>
        <td>${row.level}</td>
      </tr>`)
    .join("");
  return `
    <table class="leaderboard">
      <thead><tr><th>#</th><th>member</th><th>XP</th><th>level</th></tr></thead>
      <tbody>${body}</tbody>
    </table>`;
}
