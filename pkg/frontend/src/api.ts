/** Thin typed client over the investigation HTTP API.
 *
 * The fetch implementation is injectable so tests can serve recorded
 * responses; the console itself never computes an analytic value, it only
 * displays what these endpoints return.
 */

import type {
  InvestigationConfig,
  InvestigationDoc,
  KeywordRating,
  SortDirection,
  SortKey,
  StoryDatasets,
  StoryRow,
  TweetDoc,
  UserProfileDoc,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`${status}: ${detail}`);
  }
}

export const DATASET_KINDS = [
  "propagation",
  "timeline",
  "retweet_network",
  "coretweeted_network",
  "links",
  "summary",
  "metrics",
] as const;

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await this.fetchImpl(this.base + path, init);
    const body = await resp.json().catch(() => ({}));
    if (!resp.ok) {
      const detail =
        typeof body === "object" && body !== null && "detail" in body
          ? String((body as { detail: unknown }).detail)
          : resp.statusText;
      throw new ApiError(resp.status, detail);
    }
    return body as T;
  }

  createInvestigation(tweetId: number, corpus?: string): Promise<{ id: string; state: string }> {
    return this.request("/investigations", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(corpus ? { tweet_id: tweetId, corpus } : { tweet_id: tweetId }),
    });
  }

  getInvestigation(id: string): Promise<InvestigationDoc> {
    return this.request(`/investigations/${id}`);
  }

  putConfig(id: string, patch: Partial<InvestigationConfig>): Promise<InvestigationDoc> {
    return this.request(`/investigations/${id}/config`, {
      method: "PUT",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(patch),
    });
  }

  getDataset<K extends keyof StoryDatasets>(id: string, kind: K): Promise<StoryDatasets[K]> {
    return this.request(`/investigations/${id}/datasets/${kind}`);
  }

  async getAllDatasets(id: string): Promise<StoryDatasets> {
    const [propagation, timeline, retweet, coretweeted, links, summary, metrics] =
      await Promise.all([
        this.getDataset(id, "propagation"),
        this.getDataset(id, "timeline"),
        this.getDataset(id, "retweet_network"),
        this.getDataset(id, "coretweeted_network"),
        this.getDataset(id, "links"),
        this.getDataset(id, "summary"),
        this.getDataset(id, "metrics"),
      ]);
    return {
      propagation,
      timeline,
      retweet_network: retweet,
      coretweeted_network: coretweeted,
      links,
      summary,
      metrics,
    };
  }

  listStories(view: "condensed" | "full" = "condensed"): Promise<StoryRow[]> {
    return this.request(`/stories?view=${view}`);
  }

  rateKeyword(id: string, term: string): Promise<KeywordRating> {
    return this.request(
      `/keywords/rate?investigation=${encodeURIComponent(id)}&term=${encodeURIComponent(term)}`,
    );
  }

  suggestKeywords(id: string, k = 10): Promise<{ terms: string[] }> {
    return this.request(`/keywords/suggest?investigation=${encodeURIComponent(id)}&k=${k}`);
  }

  binListing(
    id: string,
    intervalStart: string,
    sort: SortKey = "time",
    direction: SortDirection = "asc",
  ): Promise<TweetDoc[]> {
    const start = encodeURIComponent(intervalStart);
    return this.request(
      `/investigations/${id}/bins/${start}?sort=${sort}&direction=${direction}`,
    );
  }

  tweetDetail(id: string, tweetId: number): Promise<TweetDoc> {
    return this.request(`/investigations/${id}/tweets/${tweetId}`);
  }

  userProfile(id: string, userId: number): Promise<UserProfileDoc> {
    return this.request(`/investigations/${id}/users/${userId}`);
  }
}
