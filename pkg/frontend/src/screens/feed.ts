// Discussion feed with cursor pagination. Pages stay on the snapshot
// their cursor pinned, so scrolling never duplicates or skips a card.

import { ApiClient } from "../api.js";
import type { FeedItem } from "../types.js";
import { renderFeed } from "../render/feed.js";

export interface FeedModel {
  discussionId: string;
  items: FeedItem[];
  cursor: string | null;
  exhausted: boolean;
}

export function emptyFeed(discussionId: string): FeedModel {
  return { discussionId, items: [], cursor: null, exhausted: false };
}

export async function loadMore(client: ApiClient, model: FeedModel): Promise<FeedModel> {
  if (model.exhausted) return model;
  const page = await client.feed(model.discussionId, {
    limit: 50,
    cursor: model.cursor,
  });
  return {
    ...model,
    items: [...model.items, ...page.items],
    cursor: page.next_cursor,
    exhausted: page.next_cursor === null,
  };
}

export function renderFeedModel(model: FeedModel): string {
  return renderFeed(model.items, !model.exhausted);
}
