/** Retweet and co-retweeted network panes.
 *
 * The server ships topology, degrees, and communities; positions come from
 * the client-side force layout. Node size and shade follow degree, color
 * follows the community assignment verbatim. Retweet edges curve clockwise
 * from the retweeting user to the retweeted one; co-retweeted edges reveal
 * their common-retweeter count on hover. Dense graphs draw only the
 * highest-degree nodes, with a note saying so.
 */

import { forceLayout } from "../force.js";
import { colorForClass, nodeRadius, nodeShade } from "../scales.js";
import type { ViewState } from "../state.js";
import type { NetworkDataset } from "../types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 460;
const HEIGHT = 380;
const MAX_RENDERED_NODES = 250;

export interface NetworkHooks {
  onProfile?: (userId: number) => void;
}

export function renderNetwork(
  container: HTMLElement,
  dataset: NetworkDataset,
  state: ViewState,
  kind: "retweet" | "coretweeted",
  hooks: NetworkHooks = {},
): () => void {
  container.innerHTML = "";
  container.classList.add(`pane-network-${kind}`);

  if (!dataset.nodes || dataset.nodes.length === 0) {
    const empty = document.createElement("div");
    empty.className = "empty-state";
    empty.textContent = "No network to draw for this story.";
    container.appendChild(empty);
    return () => undefined;
  }

  // Degree drives size/shade; the retweet pane uses the server-reported
  // distinct-retweeter counts, the co-retweeted pane its incident edges.
  const degree = new Map<number, number>();
  for (const node of dataset.nodes) {
    degree.set(node.id, kind === "retweet" ? (node.distinct_retweeters ?? 0) : 0);
  }
  if (kind === "coretweeted") {
    for (const edge of dataset.edges) {
      degree.set(edge.source, (degree.get(edge.source) ?? 0) + 1);
      degree.set(edge.target, (degree.get(edge.target) ?? 0) + 1);
    }
  }

  let nodes = [...dataset.nodes];
  if (nodes.length > MAX_RENDERED_NODES) {
    nodes.sort((a, b) => (degree.get(b.id) ?? 0) - (degree.get(a.id) ?? 0) || a.id - b.id);
    nodes = nodes.slice(0, MAX_RENDERED_NODES);
    const note = document.createElement("div");
    note.className = "network-note";
    note.textContent = `Showing the ${MAX_RENDERED_NODES} best-connected of ${dataset.nodes.length} accounts.`;
    container.appendChild(note);
  }
  const visible = new Set(nodes.map((n) => n.id));
  const edges = dataset.edges.filter((e) => visible.has(e.source) && visible.has(e.target));

  const positions = forceLayout(
    nodes.map((n) => n.id),
    edges,
    WIDTH,
    HEIGHT,
    nodes.length > 120 ? 60 : 120,
  );

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("class", `network-chart network-${kind}`);
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
  container.appendChild(svg);

  const maxDegree = Math.max(1, ...[...degree.values()]);

  for (const edge of edges) {
    const a = positions.get(edge.source)!;
    const b = positions.get(edge.target)!;
    if (kind === "retweet") {
      // clockwise arc from retweeter to retweeted author
      const path = document.createElementNS(SVG_NS, "path");
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const dist = Math.max(Math.hypot(dx, dy), 1e-6);
      path.setAttribute("class", "net-edge net-arc");
      path.setAttribute("data-source", String(edge.source));
      path.setAttribute("data-target", String(edge.target));
      path.setAttribute("fill", "none");
      path.setAttribute("stroke", "#9aa5b1");
      path.setAttribute("stroke-width", String(Math.min(1 + Math.log(edge.weight), 4)));
      path.setAttribute("d", `M${a.x},${a.y} A${dist},${dist} 0 0 1 ${b.x},${b.y}`);
      svg.appendChild(path);
    } else {
      const line = document.createElementNS(SVG_NS, "line");
      line.setAttribute("class", "net-edge net-line");
      line.setAttribute("data-source", String(edge.source));
      line.setAttribute("data-target", String(edge.target));
      line.setAttribute("x1", String(a.x));
      line.setAttribute("y1", String(a.y));
      line.setAttribute("x2", String(b.x));
      line.setAttribute("y2", String(b.y));
      line.setAttribute("stroke", "#9aa5b1");
      line.setAttribute("stroke-width", String(Math.min(1 + edge.weight / 4, 5)));
      const title = document.createElementNS(SVG_NS, "title");
      title.textContent = `${edge.weight} common retweeter(s)`;
      line.appendChild(title);
      svg.appendChild(line);
    }
  }

  for (const node of nodes) {
    const pos = positions.get(node.id)!;
    const circle = document.createElementNS(SVG_NS, "circle");
    const d = degree.get(node.id) ?? 0;
    circle.setAttribute("class", "net-node" + (node.verified ? " verified" : ""));
    circle.setAttribute("data-user", String(node.id));
    circle.setAttribute("cx", String(pos.x));
    circle.setAttribute("cy", String(pos.y));
    circle.setAttribute("r", String(nodeRadius(d, maxDegree)));
    circle.setAttribute("fill", colorForClass(node.community ?? 0));
    circle.setAttribute("fill-opacity", String(nodeShade(d, maxDegree)));
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = `@${node.screen_name}`;
    circle.appendChild(title);
    circle.addEventListener("click", () => {
      state.selectUser(node.id);
      hooks.onProfile?.(node.id);
    });
    svg.appendChild(circle);
  }

  const apply = () => {
    const highlights = state.highlights();
    const anything = highlights.userIds.size > 0 || highlights.tweetIds.size > 0;
    svg.querySelectorAll("circle.net-node").forEach((el) => {
      const userId = Number(el.getAttribute("data-user"));
      const hit = highlights.userIds.has(userId);
      el.classList.toggle("highlighted", hit);
      el.classList.toggle("dimmed", anything && !hit);
    });
  };
  apply();
  return state.subscribe(apply);
}
