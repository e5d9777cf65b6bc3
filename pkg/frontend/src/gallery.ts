/** Story gallery: condensed grid of every investigation, and the entry
 * point into each story's full console view. */

import { formatSkepticism } from "./scales.js";
import type { ApiClient } from "./api.js";
import type { StoryRow } from "./types.js";

export async function renderGallery(
  container: HTMLElement,
  api: ApiClient,
  onOpen: (id: string) => void,
): Promise<void> {
  const rows = await api.listStories("condensed");
  container.innerHTML = "";
  container.classList.add("pane-gallery");

  const heading = document.createElement("h2");
  heading.textContent = `Investigated stories (${rows.length})`;
  container.appendChild(heading);

  const grid = document.createElement("div");
  grid.className = "gallery-grid";
  for (const row of rows) {
    grid.appendChild(storyCard(row, onOpen));
  }
  container.appendChild(grid);
}

function storyCard(row: StoryRow, onOpen: (id: string) => void): HTMLElement {
  const card = document.createElement("div");
  card.className = `story-card state-${row.state}`;
  card.setAttribute("data-story", row.id);

  const text = document.createElement("p");
  text.className = "story-tweet";
  text.textContent = row.tweet_text ?? "(tweet unavailable)";
  card.appendChild(text);

  const badges = document.createElement("p");
  badges.className = "story-badges";
  if (row.state === "computed" && row.propagation_level) {
    badges.textContent =
      `visibility: ${row.propagation_level} · skepticism: ` +
      `${row.skepticism === null ? "?" : formatSkepticism(row.skepticism)}` +
      (row.category ? ` · ${row.category}` : "");
  } else {
    badges.textContent = "draft — not computed yet";
  }
  card.appendChild(badges);

  const open = document.createElement("button");
  open.className = "story-open";
  open.textContent = "open";
  open.addEventListener("click", () => onOpen(row.id));
  card.appendChild(open);
  return card;
}
