/** Sizing and coloring helpers shared by the charts. */

export const CLASS_PALETTE = [
  "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
  "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
];

export function colorForClass(index: number): string {
  return CLASS_PALETTE[index % CLASS_PALETTE.length];
}

/** Point radius grows with log(followers): reach, not raw count. */
export function radiusForFollowers(followers: number, min = 3, max = 16): number {
  const scaled = Math.log10(Math.max(followers, 1) + 1) / 7; // ~10M followers -> 1
  return min + Math.min(scaled, 1) * (max - min);
}

/** Node size/shade by degree: larger and darker means better connected. */
export function nodeRadius(degree: number, maxDegree: number, min = 4, max = 22): number {
  if (maxDegree <= 0) return min;
  return min + Math.sqrt(degree / maxDegree) * (max - min);
}

export function nodeShade(degree: number, maxDegree: number): number {
  if (maxDegree <= 0) return 0.35;
  return 0.35 + 0.65 * Math.sqrt(degree / maxDegree);
}

export function linearScale(
  domainMin: number,
  domainMax: number,
  rangeMin: number,
  rangeMax: number,
): (v: number) => number {
  const span = domainMax - domainMin;
  if (span === 0) return () => (rangeMin + rangeMax) / 2;
  return (v: number) => rangeMin + ((v - domainMin) / span) * (rangeMax - rangeMin);
}

export function formatSkepticism(value: number | "infinite"): string {
  return value === "infinite" ? "infinite" : String(value);
}
