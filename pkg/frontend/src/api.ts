// Thin fetch client for the researchnet HTTP API. Every list request is
// capped at 50 items per page and feed cards use sparse fieldsets, so the
// client never pulls more than a screenful per round-trip.

import type {
  AnswerResponse,
  AuthResponse,
  ChatMessage,
  Comment,
  Community,
  Discussion,
  FeedItem,
  GamificationBlock,
  Grant,
  LeaderboardRow,
  Page,
  Post,
  ProgressCard,
  Survey,
  SurveyResults,
  UserSummary,
} from "./types.js";

export const PAGE_LIMIT_CAP = 50;

export const FEED_CARD_FIELDS = [
  "id", "kind", "author_id", "actor_id", "body", "attachment",
  "hidden", "post_id", "created_at",
].join(",");

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    readonly detail: string,
  ) {
    super(`${code}: ${detail}`);
  }
}

export interface PageQuery {
  limit?: number;
  cursor?: string | null;
  fields?: string;
}

type FetchLike = typeof fetch;

export class ApiClient {
  token: string | null = null;

  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = fetch,
  ) {}

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
    query?: Record<string, string>,
  ): Promise<T> {
    const url = new URL(path, this.baseUrl);
    for (const [key, value] of Object.entries(query ?? {})) {
      url.searchParams.set(key, value);
    }
    const headers: Record<string, string> = {};
    if (this.token) headers["Authorization"] = `Bearer ${this.token}`;
    if (body !== undefined) headers["Content-Type"] = "application/json";
    const response = await this.fetchImpl(url.toString(), {
      method,
      headers,
      body: body !== undefined ? JSON.stringify(body) : undefined,
    });
    if (!response.ok) {
      let code = "HttpError";
      let detail = response.statusText;
      try {
        const payload = await response.json();
        code = payload.error ?? code;
        detail = payload.detail ?? detail;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, code, detail);
    }
    if (response.status === 204) return undefined as T;
    const type = response.headers.get("content-type") ?? "";
    // NDJSON exports are "application/x-ndjson": text, not one JSON value
    if (!type.includes("application/json")) return (await response.text()) as T;
    return (await response.json()) as T;
  }

  private pageQuery(query: PageQuery = {}): Record<string, string> {
    const limit = Math.min(query.limit ?? 20, PAGE_LIMIT_CAP);
    const params: Record<string, string> = { limit: String(limit) };
    if (query.cursor) params["cursor"] = query.cursor;
    if (query.fields) params["fields"] = query.fields;
    return params;
  }

  // --- sessions ------------------------------------------------------------

  terms(): Promise<{ version: string; document: string }> {
    return this.request("GET", "/terms");
  }

  async register(
    handle: string,
    secret: string,
    termsVersion: string,
    displayName = "",
  ): Promise<UserSummary> {
    const created = await this.request<{ user: UserSummary }>("POST", "/users", {
      handle, secret, display_name: displayName, terms_version: termsVersion,
    });
    return created.user;
  }

  async login(handle: string, secret: string): Promise<AuthResponse> {
    const session = await this.request<AuthResponse>("POST", "/auth", { handle, secret });
    this.token = session.token;
    return session;
  }

  user(userId: string): Promise<UserSummary> {
    return this.request("GET", `/users/${userId}`);
  }

  updateProfile(
    userId: string,
    patch: { bio?: string; avatar?: object; banner?: object },
  ): Promise<{ user: UserSummary; gamification: GamificationBlock }> {
    return this.request("PATCH", `/users/${userId}`, patch);
  }

  assignModerator(userId: string): Promise<{ user: UserSummary }> {
    return this.request("PATCH", `/users/${userId}`, { role: "moderator" });
  }

  // --- forum ----------------------------------------------------------------

  communities(query?: PageQuery): Promise<Page<Community>> {
    return this.request("GET", "/communities", undefined, this.pageQuery(query));
  }

  createCommunity(title: string, description = ""): Promise<{ community: Community }> {
    return this.request("POST", "/communities", { title, description });
  }

  discussions(communityId: string, query?: PageQuery): Promise<Page<Discussion>> {
    return this.request(
      "GET", `/communities/${communityId}/discussions`, undefined, this.pageQuery(query));
  }

  createDiscussion(communityId: string, title: string): Promise<{ discussion: Discussion }> {
    return this.request("POST", `/communities/${communityId}/discussions`, { title });
  }

  feed(discussionId: string, query?: PageQuery): Promise<Page<FeedItem>> {
    return this.request("GET", `/discussions/${discussionId}/posts`, undefined,
      this.pageQuery({ fields: FEED_CARD_FIELDS, ...query }));
  }

  createPost(
    discussionId: string,
    body: string,
    attachment?: { kind: string; content_ref: string; size_bytes: number },
  ): Promise<{ post: Post; gamification: GamificationBlock }> {
    return this.request("POST", `/discussions/${discussionId}/posts`, { body, attachment });
  }

  like(postId: string): Promise<{ post_id: string; gamification: GamificationBlock }> {
    return this.request("POST", `/posts/${postId}/likes`, {});
  }

  comments(postId: string, query?: PageQuery): Promise<Page<Comment>> {
    return this.request("GET", `/posts/${postId}/comments`, undefined, this.pageQuery(query));
  }

  comment(postId: string, body: string): Promise<{ comment: Comment; gamification: GamificationBlock }> {
    return this.request("POST", `/posts/${postId}/comments`, { body });
  }

  share(postId: string, targetDiscussionId?: string): Promise<{ share: object; gamification: GamificationBlock }> {
    return this.request("POST", `/posts/${postId}/shares`,
      { target_discussion_id: targetDiscussionId ?? null });
  }

  hidePost(postId: string, hidden = true): Promise<{ post: Post }> {
    return this.request("POST", `/posts/${postId}/hide`, { hidden });
  }

  // --- chat -------------------------------------------------------------------

  conversation(peerId: string, query?: PageQuery): Promise<Page<ChatMessage>> {
    return this.request("GET", `/chats/${peerId}`, undefined, this.pageQuery(query));
  }

  sendChat(peerId: string, body: string): Promise<{ message: ChatMessage; gamification: GamificationBlock }> {
    return this.request("POST", `/chats/${peerId}/messages`, { body });
  }

  // --- surveys ----------------------------------------------------------------

  surveys(communityId: string): Promise<{ items: Survey[] }> {
    return this.request("GET", `/communities/${communityId}/surveys`);
  }

  survey(surveyId: string): Promise<Survey> {
    return this.request("GET", `/surveys/${surveyId}`);
  }

  createSurvey(
    communityId: string,
    question: string,
    options: string[],
    closesAt?: string,
  ): Promise<{ survey: Survey }> {
    return this.request("POST", `/communities/${communityId}/surveys`,
      { question, options, closes_at: closesAt ?? null });
  }

  answerSurvey(surveyId: string, optionIndex: number): Promise<AnswerResponse> {
    return this.request("POST", `/surveys/${surveyId}/answers`, { option_index: optionIndex });
  }

  surveyResults(surveyId: string): Promise<{ results: SurveyResults }> {
    return this.request("GET", `/surveys/${surveyId}/results`);
  }

  closeSurvey(surveyId: string): Promise<{ survey: Survey }> {
    return this.request("POST", `/surveys/${surveyId}/close`, {});
  }

  // --- gamification -------------------------------------------------------------

  progressCard(): Promise<ProgressCard> {
    return this.request("GET", "/gamification/me");
  }

  leaderboard(query?: PageQuery): Promise<Page<LeaderboardRow>> {
    return this.request("GET", "/leaderboard", undefined, this.pageQuery(query));
  }

  // --- research -------------------------------------------------------------------

  grantResearcher(userId: string, termDocument: string): Promise<{ grant: Grant }> {
    return this.request("POST", "/research/grants", {
      user_id: userId, term_document: termDocument,
    });
  }

  revokeResearcher(userId: string): Promise<{ grant: Grant }> {
    return this.request("DELETE", `/research/grants/${userId}`);
  }

  exportEvents(range?: string): Promise<string> {
    return this.request("GET", "/research/export/events", undefined,
      range ? { range } : undefined);
  }

  exportUsers(): Promise<string> {
    return this.request("GET", "/research/export/users");
  }

  exportGraph(kinds?: string): Promise<string> {
    return this.request("GET", "/research/export/graph", undefined,
      kinds ? { kinds } : undefined);
  }

  metrics(): Promise<object> {
    return this.request("GET", "/research/metrics");
  }
}
