/** Shared view state: one selection, highlighted everywhere.
 *
 * Selecting a tweet, a user, or a timeline bin in any pane highlights the
 * corresponding entities in all other panes. The derivation only walks
 * datasets already loaded from the API; nothing is recomputed here.
 */

import type { InvestigationConfig, StoryDatasets } from "./types.js";

export interface Selection {
  tweetId: number | null;
  userId: number | null;
  binStart: string | null;
}

export interface Highlights {
  tweetIds: Set<number>;
  userIds: Set<number>;
  binStarts: Set<string>;
}

export type Listener = () => void;

const BIN_MS = 600_000;

export function binStartOf(createdAt: string): string {
  const t = Date.parse(createdAt);
  const floored = t - (t % BIN_MS);
  return new Date(floored).toISOString().replace(".000Z", "Z");
}

export class ViewState {
  activeInvestigation: string | null = null;
  datasets: StoryDatasets | null = null;
  pendingConfig: InvestigationConfig | null = null;
  selection: Selection = { tweetId: null, userId: null, binStart: null };

  private listeners: Listener[] = [];

  subscribe(fn: Listener): () => void {
    this.listeners.push(fn);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== fn);
    };
  }

  private notify(): void {
    for (const fn of this.listeners) fn();
  }

  loadStory(id: string, datasets: StoryDatasets, config: InvestigationConfig): void {
    this.activeInvestigation = id;
    this.datasets = datasets;
    this.pendingConfig = structuredClone(config);
    this.selection = { tweetId: null, userId: null, binStart: null };
    this.notify();
  }

  /** Local config edits stay in pendingConfig until the refine round-trip. */
  editConfig(mutate: (config: InvestigationConfig) => void): void {
    if (!this.pendingConfig) return;
    mutate(this.pendingConfig);
    this.notify();
  }

  selectTweet(tweetId: number | null): void {
    const point = this.point(tweetId);
    this.selection = {
      tweetId,
      userId: point ? point.user_id : null,
      binStart: point ? binStartOf(point.created_at) : null,
    };
    this.notify();
  }

  selectUser(userId: number | null): void {
    this.selection = { tweetId: null, userId, binStart: null };
    this.notify();
  }

  selectBin(binStart: string | null): void {
    this.selection = { tweetId: null, userId: null, binStart };
    this.notify();
  }

  clearSelection(): void {
    this.selection = { tweetId: null, userId: null, binStart: null };
    this.notify();
  }

  private point(tweetId: number | null) {
    if (tweetId === null || !this.datasets) return undefined;
    return this.datasets.propagation.points?.find((p) => p.tweet_id === tweetId);
  }

  /** Everything the current selection touches, across all panes. */
  highlights(): Highlights {
    const out: Highlights = { tweetIds: new Set(), userIds: new Set(), binStarts: new Set() };
    const { tweetId, userId, binStart } = this.selection;
    const points = this.datasets?.propagation.points ?? [];

    if (tweetId !== null) {
      out.tweetIds.add(tweetId);
      const point = this.point(tweetId);
      if (point) {
        out.userIds.add(point.user_id);
        out.binStarts.add(binStartOf(point.created_at));
      }
    }
    if (userId !== null) {
      out.userIds.add(userId);
      for (const p of points) {
        if (p.user_id === userId) {
          out.tweetIds.add(p.tweet_id);
          out.binStarts.add(binStartOf(p.created_at));
        }
      }
    }
    if (binStart !== null) {
      out.binStarts.add(binStart);
      for (const p of points) {
        if (binStartOf(p.created_at) === binStart) {
          out.tweetIds.add(p.tweet_id);
          out.userIds.add(p.user_id);
        }
      }
    }
    return out;
  }
}
