/** Account panel: the profile the user supplied plus their story tweets. */

import type { ApiClient } from "../api.js";
import type { ViewState } from "../state.js";

export class ProfilePane {
  constructor(
    private readonly container: HTMLElement,
    private readonly api: ApiClient,
    private readonly state: ViewState,
  ) {
    container.classList.add("pane-profile");
  }

  async open(userId: number): Promise<void> {
    if (!this.state.activeInvestigation) return;
    const profile = await this.api.userProfile(this.state.activeInvestigation, userId);
    const c = this.container;
    c.innerHTML = "";

    const name = document.createElement("h3");
    name.className = "profile-name" + (profile.verified ? " verified" : "");
    name.textContent = `@${profile.screen_name}`;
    c.appendChild(name);

    const meta = document.createElement("p");
    meta.className = "profile-meta";
    meta.textContent =
      `${profile.followers_count} followers` +
      (profile.account_created_at ? ` · since ${profile.account_created_at.slice(0, 10)}` : "");
    c.appendChild(meta);

    if (profile.description) {
      const bio = document.createElement("p");
      bio.className = "profile-bio";
      bio.textContent = profile.description;
      c.appendChild(bio);
    }

    const heading = document.createElement("h4");
    heading.textContent = `Tweets in this story (${profile.tweets.length})`;
    c.appendChild(heading);

    const list = document.createElement("ul");
    list.className = "profile-tweets";
    for (const tweet of profile.tweets) {
      const item = document.createElement("li");
      item.setAttribute("data-tweet", String(tweet.tweet_id));
      item.textContent = `${tweet.created_at} — ${tweet.text}`;
      item.addEventListener("click", () => this.state.selectTweet(tweet.tweet_id));
      list.appendChild(item);
    }
    c.appendChild(list);
  }
}
