/** Per-bin tweet pane with server-side sorting.
 *
 * The ordering comes back from the API (retweets, time, or originals
 * first, each ascending or descending); this pane only renders it.
 */

import type { ApiClient } from "../api.js";
import type { ViewState } from "../state.js";
import type { SortDirection, SortKey, TweetDoc } from "../types.js";

const SORT_KEYS: SortKey[] = ["retweets", "time", "original_first"];

export class TweetListPane {
  private sort: SortKey = "time";
  private direction: SortDirection = "asc";
  private binStart: string | null = null;

  constructor(
    private readonly container: HTMLElement,
    private readonly api: ApiClient,
    private readonly state: ViewState,
  ) {
    container.classList.add("pane-bin-tweets");
  }

  async open(binStart: string): Promise<void> {
    this.binStart = binStart;
    await this.reload();
  }

  private async reload(): Promise<void> {
    if (!this.binStart || !this.state.activeInvestigation) return;
    const rows = await this.api.binListing(
      this.state.activeInvestigation,
      this.binStart,
      this.sort,
      this.direction,
    );
    this.render(rows);
  }

  private render(rows: TweetDoc[]): void {
    const c = this.container;
    c.innerHTML = "";

    const header = document.createElement("div");
    header.className = "bin-header";
    header.textContent = `Tweets in the 10-minute interval starting ${this.binStart}`;
    c.appendChild(header);

    const controls = document.createElement("div");
    controls.className = "bin-sort-controls";
    const select = document.createElement("select");
    select.className = "bin-sort-key";
    for (const key of SORT_KEYS) {
      const option = document.createElement("option");
      option.value = key;
      option.textContent = key;
      option.selected = key === this.sort;
      select.appendChild(option);
    }
    select.addEventListener("change", () => {
      this.sort = select.value as SortKey;
      void this.reload();
    });
    controls.appendChild(select);

    const dir = document.createElement("button");
    dir.className = "bin-sort-direction";
    dir.textContent = this.direction;
    dir.addEventListener("click", () => {
      this.direction = this.direction === "asc" ? "desc" : "asc";
      void this.reload();
    });
    controls.appendChild(dir);
    c.appendChild(controls);

    const list = document.createElement("ul");
    list.className = "bin-tweet-list";
    for (const tweet of rows) {
      const item = document.createElement("li");
      item.className = "bin-tweet" + (tweet.is_retweet ? " retweet" : " original");
      item.setAttribute("data-tweet", String(tweet.tweet_id));
      item.setAttribute("data-user", String(tweet.user.user_id));
      item.textContent = `@${tweet.user.screen_name}: ${tweet.text} — ${tweet.retweet_count} RT`;
      item.addEventListener("click", () => this.state.selectTweet(tweet.tweet_id));
      list.appendChild(item);
    }
    c.appendChild(list);
  }
}
