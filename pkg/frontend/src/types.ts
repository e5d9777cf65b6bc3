/** Shapes of the documents served by the investigation API. */

export type KeywordRole = "required" | "optional" | "excluded";

export interface KeywordSpec {
  term: string;
  role: KeywordRole;
}

export interface InvestigationConfig {
  investigative_tweet_id: number;
  search_terms: string[];
  keywords: KeywordSpec[];
  required_mode: "all" | "at_least_one";
  optional_threshold: number;
  time_window: [string, string] | null;
  max_tweets_per_term: number;
  negation_add: string[];
  negation_remove: string[];
  timeline_keywords: string[];
  category: string | null;
}

export interface InvestigationDoc {
  id: string;
  corpus_ref: string;
  state: "draft" | "computed" | "error";
  config: InvestigationConfig;
  created_at: string;
  updated_at: string;
  error: string | null;
  artifact_kinds?: string[];
}

export interface PropagationPoint {
  tweet_id: number;
  created_at: string;
  retweet_count: number;
  followers_count: number;
  verified: boolean;
  color_class: number;
  user_id: number;
  screen_name: string;
  text: string;
}

export interface IntervalDoc {
  index: number;
  start: string;
  end: string;
  tweet_ids: number[];
  retweet_total: number;
}

export interface PropagationDataset {
  breaking_interval: IntervalDoc;
  burst_scores: { index: number; burstiness: number; retweet_total: number; prev_total: number }[];
  points: PropagationPoint[];
  originator: number | null;
  status?: string;
}

export interface TimelineBin {
  start: string;
  count: number;
}

export interface TimelineSeries {
  label: string;
  bins: TimelineBin[];
}

export interface TimelineDataset {
  series: TimelineSeries[];
  status?: string;
}

export interface GraphNodeDoc {
  id: number;
  screen_name: string;
  verified: boolean;
  tweets_in_story: number;
  community: number | null;
  distinct_retweeters?: number;
}

export interface GraphEdgeDoc {
  source: number;
  target: number;
  weight: number;
}

export interface ActorDoc {
  user_id: number;
  screen_name: string;
  distinct_retweeters: number;
  retweet_events: number;
}

export interface NetworkDataset {
  nodes: GraphNodeDoc[];
  edges: GraphEdgeDoc[];
  modularity: number | null;
  main_actors?: ActorDoc[];
  status?: string;
}

export interface LinkEntry {
  canonical_url: string;
  tweet_count: number;
  distinct_user_count: number;
  tweet_ids: number[];
}

export interface LinksDataset {
  entries: LinkEntry[];
  status?: string;
}

export interface MetricsDoc {
  propagation_h: number;
  propagation_level: string;
  negation_h: number;
  non_negation_h: number;
  skepticism: number | "infinite";
  category: string;
  category_source: string;
  status?: string;
}

export interface SummaryDoc {
  tweet_count: number;
  originals_count: number;
  retweets_count: number;
  originator: {
    tweet_id: number;
    screen_name: string;
    retweet_count: number;
    created_at: string;
  } | null;
  break_time: string;
  burst_strength: number;
  still_spreading: boolean;
  top_propagators: ActorDoc[];
  negation_present: boolean;
  first_negation_time: string | null;
  metrics: MetricsDoc;
  headline_text: string;
  status?: string;
}

export interface TweetDoc {
  tweet_id: number;
  created_at: string;
  text: string;
  retweet_count: number;
  is_retweet: boolean;
  retweet_of: number | null;
  user: {
    user_id: number;
    screen_name: string;
    followers_count: number;
    verified: boolean;
  };
}

export interface UserProfileDoc {
  user_id: number;
  screen_name: string;
  description: string;
  followers_count: number;
  verified: boolean;
  account_created_at: string | null;
  tweets: TweetDoc[];
}

export interface StoryRow {
  id: string;
  state: string;
  tweet_id: number;
  tweet_text: string | null;
  propagation_level: string | null;
  skepticism: number | "infinite" | null;
  category: string | null;
  summary?: SummaryDoc | null;
  metrics?: MetricsDoc | null;
  datasets?: Record<string, string>;
}

export interface KeywordRating {
  term: string;
  cohesion: number;
  affinity: number;
  rating: number;
}

export type SortKey = "retweets" | "time" | "original_first";
export type SortDirection = "asc" | "desc";

export interface StoryDatasets {
  propagation: PropagationDataset;
  timeline: TimelineDataset;
  retweet_network: NetworkDataset;
  coretweeted_network: NetworkDataset;
  links: LinksDataset;
  summary: SummaryDoc;
  metrics: MetricsDoc;
}
