/** Whole-story activity lines: all tweets, the negating subset, and any
 * keyword series the user asked for. Clicking a bin selects it everywhere
 * and opens the per-bin tweet pane; series can be toggled off, and the
 * vertical scale follows the visible series.
 */

import { colorForClass, linearScale } from "../scales.js";
import type { ViewState } from "../state.js";
import type { TimelineDataset } from "../types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 720;
const HEIGHT = 260;
const PAD = 36;

export interface TimelineHooks {
  onBinOpen?: (binStart: string) => void;
}

export function renderTimeline(
  container: HTMLElement,
  dataset: TimelineDataset,
  state: ViewState,
  hooks: TimelineHooks = {},
): () => void {
  container.innerHTML = "";
  container.classList.add("pane-timeline");

  if (!dataset.series || dataset.series.length === 0) {
    const empty = document.createElement("div");
    empty.className = "empty-state";
    empty.textContent = "No timeline yet.";
    container.appendChild(empty);
    return () => undefined;
  }

  const hidden = new Set<string>();
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("class", "timeline-chart");
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
  container.appendChild(svg);

  const legend = document.createElement("div");
  legend.className = "timeline-legend";
  for (const series of dataset.series) {
    const label = document.createElement("label");
    const box = document.createElement("input");
    box.type = "checkbox";
    box.checked = true;
    box.setAttribute("data-series", series.label);
    box.addEventListener("change", () => {
      if (box.checked) hidden.delete(series.label);
      else hidden.add(series.label);
      draw();
    });
    label.appendChild(box);
    label.appendChild(document.createTextNode(series.label));
    legend.appendChild(label);
  }
  container.appendChild(legend);

  const starts = dataset.series[0].bins.map((b) => b.start);
  const x = linearScale(0, Math.max(starts.length - 1, 1), PAD, WIDTH - PAD);

  function draw(): void {
    svg.innerHTML = "";
    const visible = dataset.series.filter((s) => !hidden.has(s.label));
    const peak = Math.max(1, ...visible.flatMap((s) => s.bins.map((b) => b.count)));
    const y = linearScale(0, peak, HEIGHT - PAD, PAD);

    for (const [index, series] of dataset.series.entries()) {
      if (hidden.has(series.label)) continue;
      const path = document.createElementNS(SVG_NS, "path");
      const d = series.bins
        .map((bin, i) => `${i === 0 ? "M" : "L"}${x(i)},${y(bin.count)}`)
        .join(" ");
      path.setAttribute("class", "series-line");
      path.setAttribute("data-label", series.label);
      path.setAttribute("fill", "none");
      path.setAttribute("stroke", colorForClass(index));
      path.setAttribute("d", d);
      svg.appendChild(path);

      for (const [i, bin] of series.bins.entries()) {
        const dot = document.createElementNS(SVG_NS, "circle");
        dot.setAttribute("class", "bin-dot");
        dot.setAttribute("data-series", series.label);
        dot.setAttribute("data-start", bin.start);
        dot.setAttribute("cx", String(x(i)));
        dot.setAttribute("cy", String(y(bin.count)));
        dot.setAttribute("r", "3.5");
        dot.setAttribute("fill", colorForClass(index));
        const title = document.createElementNS(SVG_NS, "title");
        title.textContent = `${series.label} ${bin.start}: ${bin.count} tweets`;
        dot.appendChild(title);
        dot.addEventListener("click", () => {
          state.selectBin(bin.start);
          hooks.onBinOpen?.(bin.start);
        });
        svg.appendChild(dot);
      }
    }
    applyHighlights();
  }

  function applyHighlights(): void {
    const highlights = state.highlights();
    svg.querySelectorAll("circle.bin-dot").forEach((el) => {
      const start = el.getAttribute("data-start") ?? "";
      el.classList.toggle("highlighted", highlights.binStarts.has(start));
    });
  }

  draw();
  return state.subscribe(applyHighlights);
}
