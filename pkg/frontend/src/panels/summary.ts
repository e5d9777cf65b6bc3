/** Report pane: the generated summary, metrics, and link bibliography. */

import { formatSkepticism } from "../scales.js";
import type { LinksDataset, MetricsDoc, SummaryDoc } from "../types.js";

export function renderSummary(
  container: HTMLElement,
  summary: SummaryDoc,
  metrics: MetricsDoc,
  links: LinksDataset,
): void {
  container.innerHTML = "";
  container.classList.add("pane-summary");

  const headline = document.createElement("p");
  headline.className = "summary-headline";
  headline.textContent = summary.headline_text;
  container.appendChild(headline);

  const facts = document.createElement("dl");
  facts.className = "summary-facts";
  const fact = (label: string, value: string) => {
    const dt = document.createElement("dt");
    dt.textContent = label;
    const dd = document.createElement("dd");
    dd.textContent = value;
    facts.appendChild(dt);
    facts.appendChild(dd);
  };
  fact("Tweets", `${summary.tweet_count} (${summary.originals_count} originals)`);
  fact(
    "Originator",
    summary.originator
      ? `@${summary.originator.screen_name} (${summary.originator.retweet_count} retweets)`
      : "none cleared the visibility floor",
  );
  fact("Broke at", summary.break_time);
  fact("Propagation", `${metrics.propagation_level} (h-index ${metrics.propagation_h})`);
  fact("Skepticism", formatSkepticism(metrics.skepticism));
  fact("Still spreading", summary.still_spreading ? "yes" : "no");
  fact("First negation", summary.first_negation_time ?? "none seen");
  container.appendChild(facts);

  const linksHeading = document.createElement("h4");
  linksHeading.textContent = "Tweeted link bibliography";
  container.appendChild(linksHeading);

  const list = document.createElement("ol");
  list.className = "link-bibliography";
  for (const entry of links.entries ?? []) {
    const item = document.createElement("li");
    const anchor = document.createElement("a");
    anchor.href = entry.canonical_url;
    anchor.textContent = entry.canonical_url;
    item.appendChild(anchor);
    item.appendChild(
      document.createTextNode(
        ` — ${entry.tweet_count} tweets by ${entry.distinct_user_count} accounts`,
      ),
    );
    list.appendChild(item);
  }
  container.appendChild(list);
}
