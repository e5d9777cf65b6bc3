/** Breaking-moment scatter: every point is one original tweet.
 *
 * x is time, y is retweets received, radius follows log(followers),
 * verified authors get a bright border, and points with similar wording
 * share a color. Clicking a point selects the tweet everywhere.
 */

import { colorForClass, linearScale, radiusForFollowers } from "../scales.js";
import type { ViewState } from "../state.js";
import type { PropagationDataset } from "../types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 720;
const HEIGHT = 320;
const PAD = 40;

export function renderPropagation(
  container: HTMLElement,
  dataset: PropagationDataset,
  state: ViewState,
): () => void {
  container.innerHTML = "";
  container.classList.add("pane-propagation");

  if (!dataset.points || dataset.points.length === 0) {
    const empty = document.createElement("div");
    empty.className = "empty-state";
    empty.textContent = "No tweets in the breaking window — loosen the filter and refine.";
    container.appendChild(empty);
    return () => undefined;
  }

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("class", "prop-chart");
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);

  const times = dataset.points.map((p) => Date.parse(p.created_at));
  const counts = dataset.points.map((p) => p.retweet_count);
  const x = linearScale(Math.min(...times), Math.max(...times), PAD, WIDTH - PAD);
  const y = linearScale(0, Math.max(...counts, 1), HEIGHT - PAD, PAD);

  const tooltip = document.createElement("div");
  tooltip.className = "prop-tooltip";
  tooltip.style.display = "none";

  for (const point of dataset.points) {
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("class", "prop-point" + (point.verified ? " verified" : ""));
    circle.setAttribute("data-tweet", String(point.tweet_id));
    circle.setAttribute("data-user", String(point.user_id));
    circle.setAttribute("cx", String(x(Date.parse(point.created_at))));
    circle.setAttribute("cy", String(y(point.retweet_count)));
    circle.setAttribute("r", String(radiusForFollowers(point.followers_count)));
    circle.setAttribute("fill", colorForClass(point.color_class));

    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = `@${point.screen_name}: ${point.text} (${point.retweet_count} retweets)`;
    circle.appendChild(title);

    circle.addEventListener("click", () => state.selectTweet(point.tweet_id));
    circle.addEventListener("mouseenter", () => {
      tooltip.textContent = `@${point.screen_name}: ${point.text}`;
      tooltip.style.display = "block";
    });
    circle.addEventListener("mouseleave", () => {
      tooltip.style.display = "none";
    });
    svg.appendChild(circle);
  }

  container.appendChild(svg);
  container.appendChild(tooltip);

  const apply = () => {
    const highlights = state.highlights();
    const anything =
      highlights.tweetIds.size > 0 || highlights.userIds.size > 0 || highlights.binStarts.size > 0;
    svg.querySelectorAll("circle.prop-point").forEach((el) => {
      const tweetId = Number(el.getAttribute("data-tweet"));
      const userId = Number(el.getAttribute("data-user"));
      const hit = highlights.tweetIds.has(tweetId) || highlights.userIds.has(userId);
      el.classList.toggle("highlighted", hit);
      el.classList.toggle("dimmed", anything && !hit);
    });
  };
  apply();
  return state.subscribe(apply);
}
