// Wire shapes as the API serves them. The client renders these values
// verbatim: XP, levels and result fractions are never recomputed here.

export interface UserSummary {
  id: string;
  handle: string;
  display_name: string;
  role: "ordinary" | "moderator";
  bio: string;
  avatar_ref: string | null;
  banner_ref: string | null;
  terms_version: string;
  created_at: string;
}

export interface FeedbackEvent {
  kind: "xp_gained" | "mission_completed" | "level_up" | "medal_unlocked";
  value: number | string;
  medal_name?: string;
}

export interface GamificationBlock {
  xp: number;
  level: number;
  feedback: FeedbackEvent[];
}

export interface MedalChip {
  index: number;
  name: string;
}

export interface MissionRow {
  mission_id: string;
  count: number;
  granted: boolean;
  window_start: string | null;
}

export interface ProgressCard {
  user_id: string;
  xp: number;
  level: number;
  level_floor_xp: number;
  next_level_xp: number | null;
  xp_into_level: number;
  level_span: number | null;
  medals: MedalChip[];
  missions: MissionRow[];
}

export interface Community {
  id: string;
  title: string;
  description: string;
  moderator_ids: string[];
  created_at: string;
}

export interface Discussion {
  id: string;
  community_id: string;
  title: string;
  creator_id: string;
  created_at: string;
}

export interface Attachment {
  id: string;
  kind: "image" | "video" | "pdf";
  content_ref: string;
  size_bytes: number;
  declared_media_type: string;
}

export interface Post {
  id: string;
  kind: "post";
  discussion_id: string;
  author_id: string;
  body: string;
  attachment: Attachment | null;
  hidden: boolean;
  created_at: string;
}

export interface Share {
  id: string;
  kind: "share";
  post_id: string;
  actor_id: string;
  target_discussion_id: string | null;
  created_at: string;
}

export type FeedItem = Post | Share;

export interface Comment {
  id: string;
  post_id: string;
  author_id: string;
  body: string;
  created_at: string;
}

export interface ChatMessage {
  id: string;
  sender_id: string;
  recipient_id: string;
  body: string;
  created_at: string;
}

export interface Survey {
  id: string;
  community_id: string;
  creator_id: string;
  question: string;
  options: string[];
  opens_at: string;
  closes_at: string | null;
  status: "open" | "closed";
}

export interface SurveyResults {
  survey_id: string;
  counts: number[];
  fractions: number[];
  total_respondents: number;
}

export interface LeaderboardRow {
  rank: number;
  user_id: string;
  handle: string;
  display_name: string;
  xp: number;
  level: number;
}

export interface Page<T> {
  items: T[];
  next_cursor: string | null;
  snapshot_event_id: number;
}

export interface AuthResponse {
  token: string;
  expires_at: string;
  user: UserSummary;
}

export interface AnswerResponse {
  response: { survey_id: string; respondent_id: string; option_index: number; answered_at: string };
  results: SurveyResults;
  gamification: GamificationBlock;
}

export interface Grant {
  user_id: string;
  term_doc_hash: string;
  signed_at: string;
  granted_by: string;
  active: boolean;
}
