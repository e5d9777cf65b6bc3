/** Console wiring: routes, dataset loading, and pane refresh.
 *
 * Routes: `#/` is the gallery, `#/story/{id}` the full console for one
 * investigation. A successful refinement reloads every pane from fresh
 * API responses.
 */

import { ApiClient } from "./api.js";
import { renderGallery } from "./gallery.js";
import { renderNetwork } from "./charts/network.js";
import { renderPropagation } from "./charts/propagation.js";
import { renderTimeline } from "./charts/timeline.js";
import { ProfilePane } from "./panels/profile.js";
import { renderSummary } from "./panels/summary.js";
import { TweetListPane } from "./panels/tweetList.js";
import { RefinePanel } from "./refine.js";
import { ViewState } from "./state.js";

export interface AppPanes {
  gallery: HTMLElement;
  summary: HTMLElement;
  propagation: HTMLElement;
  timeline: HTMLElement;
  retweetNetwork: HTMLElement;
  coretweetedNetwork: HTMLElement;
  binTweets: HTMLElement;
  profile: HTMLElement;
  refine: HTMLElement;
}

export class ConsoleApp {
  readonly state = new ViewState();
  /** How many times each pane group has been (re)rendered; tests use this
   * to check the refinement reload contract. */
  renderCount = 0;
  private disposers: (() => void)[] = [];

  constructor(
    private readonly panes: AppPanes,
    private readonly api: ApiClient,
  ) {}

  async route(hash: string): Promise<void> {
    const storyMatch = /^#\/story\/(.+)$/.exec(hash);
    if (storyMatch) {
      await this.openStory(storyMatch[1]);
    } else {
      await this.openGallery();
    }
  }

  async openGallery(): Promise<void> {
    await renderGallery(this.panes.gallery, this.api, (id) => {
      window.location.hash = `#/story/${id}`;
      void this.openStory(id);
    });
  }

  async openStory(id: string): Promise<void> {
    const investigation = await this.api.getInvestigation(id);
    if (investigation.state !== "computed") {
      this.state.activeInvestigation = id;
      this.state.pendingConfig = structuredClone(investigation.config);
      this.renderRefine(investigation.config.investigative_tweet_id);
      this.panes.summary.innerHTML =
        "<div class='empty-state'>Draft investigation: choose keywords and recompute.</div>";
      return;
    }
    const datasets = await this.api.getAllDatasets(id);
    this.state.loadStory(id, datasets, investigation.config);
    this.renderAll();
  }

  private renderAll(): void {
    const datasets = this.state.datasets;
    if (!datasets) return;
    for (const dispose of this.disposers) dispose();
    this.disposers = [];

    const tweetList = new TweetListPane(this.panes.binTweets, this.api, this.state);
    const profile = new ProfilePane(this.panes.profile, this.api, this.state);

    this.disposers.push(
      renderPropagation(this.panes.propagation, datasets.propagation, this.state),
    );
    this.disposers.push(
      renderTimeline(this.panes.timeline, datasets.timeline, this.state, {
        onBinOpen: (start) => void tweetList.open(start),
      }),
    );
    this.disposers.push(
      renderNetwork(this.panes.retweetNetwork, datasets.retweet_network, this.state, "retweet", {
        onProfile: (userId) => void profile.open(userId),
      }),
    );
    this.disposers.push(
      renderNetwork(
        this.panes.coretweetedNetwork,
        datasets.coretweeted_network,
        this.state,
        "coretweeted",
        { onProfile: (userId) => void profile.open(userId) },
      ),
    );
    renderSummary(this.panes.summary, datasets.summary, datasets.metrics, datasets.links);

    const pivotText =
      datasets.propagation.points?.find(
        (p) => p.tweet_id === this.state.pendingConfig?.investigative_tweet_id,
      )?.text ?? "";
    this.renderRefine(this.state.pendingConfig?.investigative_tweet_id ?? 0, pivotText);
    this.renderCount += 1;
  }

  private renderRefine(tweetId: number, knownText = ""): void {
    const mount = (text: string) => {
      const panel = new RefinePanel(this.panes.refine, this.api, this.state, text, async () => {
        if (this.state.activeInvestigation) {
          await this.openStory(this.state.activeInvestigation);
        }
      });
      panel.render();
    };
    if (knownText) {
      mount(knownText);
      return;
    }
    if (this.state.activeInvestigation) {
      this.api
        .tweetDetail(this.state.activeInvestigation, tweetId)
        .then((tweet) => mount(tweet.text))
        .catch(() => mount(""));
    } else {
      mount("");
    }
  }
}

export function bootstrap(root: HTMLElement, baseUrl = ""): ConsoleApp {
  root.innerHTML = `
    <header><h1>storytrace console</h1></header>
    <div id="gallery"></div>
    <div class="console-grid">
      <section id="summary"></section>
      <section id="refine"></section>
      <section id="propagation"></section>
      <section id="timeline"></section>
      <section id="retweet-network"></section>
      <section id="coretweeted-network"></section>
      <section id="bin-tweets"></section>
      <section id="profile"></section>
    </div>`;
  const pane = (id: string) => root.querySelector<HTMLElement>(`#${id}`)!;
  const app = new ConsoleApp(
    {
      gallery: pane("gallery"),
      summary: pane("summary"),
      propagation: pane("propagation"),
      timeline: pane("timeline"),
      retweetNetwork: pane("retweet-network"),
      coretweetedNetwork: pane("coretweeted-network"),
      binTweets: pane("bin-tweets"),
      profile: pane("profile"),
      refine: pane("refine"),
    },
    new ApiClient(baseUrl),
  );
  window.addEventListener("hashchange", () => void app.route(window.location.hash));
  void app.route(window.location.hash);
  return app;
}
