/** Small deterministic force-directed layout.
 *
 * Layout is presentation only: the engine ships topology, degrees, and
 * communities, and positions are computed client-side. A seeded PRNG
 * keeps test runs reproducible.
 */

export interface LayoutNode {
  id: number;
  x: number;
  y: number;
}

export interface LayoutEdge {
  source: number;
  target: number;
  weight: number;
}

function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function forceLayout(
  ids: number[],
  edges: LayoutEdge[],
  width: number,
  height: number,
  iterations = 120,
  seed = 42,
): Map<number, LayoutNode> {
  const rng = mulberry32(seed);
  const nodes = new Map<number, LayoutNode>();
  for (const id of ids) {
    nodes.set(id, { id, x: rng() * width, y: rng() * height });
  }
  if (ids.length <= 1) {
    for (const n of nodes.values()) {
      n.x = width / 2;
      n.y = height / 2;
    }
    return nodes;
  }

  const area = width * height;
  const k = Math.sqrt(area / ids.length); // ideal pairwise distance
  let temperature = width / 8;

  for (let step = 0; step < iterations; step++) {
    const dx = new Map<number, number>();
    const dy = new Map<number, number>();
    for (const id of ids) {
      dx.set(id, 0);
      dy.set(id, 0);
    }

    // repulsion (capped n^2; callers downsample very large graphs)
    for (let i = 0; i < ids.length; i++) {
      for (let j = i + 1; j < ids.length; j++) {
        const a = nodes.get(ids[i])!;
        const b = nodes.get(ids[j])!;
        let vx = a.x - b.x;
        let vy = a.y - b.y;
        let dist = Math.hypot(vx, vy);
        if (dist < 1e-6) {
          vx = rng() - 0.5;
          vy = rng() - 0.5;
          dist = Math.hypot(vx, vy);
        }
        const force = (k * k) / dist;
        dx.set(a.id, dx.get(a.id)! + (vx / dist) * force);
        dy.set(a.id, dy.get(a.id)! + (vy / dist) * force);
        dx.set(b.id, dx.get(b.id)! - (vx / dist) * force);
        dy.set(b.id, dy.get(b.id)! - (vy / dist) * force);
      }
    }

    // attraction along edges, stronger for heavier weights
    for (const e of edges) {
      const a = nodes.get(e.source);
      const b = nodes.get(e.target);
      if (!a || !b) continue;
      const vx = a.x - b.x;
      const vy = a.y - b.y;
      const dist = Math.max(Math.hypot(vx, vy), 1e-6);
      const force = ((dist * dist) / k) * Math.min(1 + Math.log(e.weight), 4);
      dx.set(a.id, dx.get(a.id)! - (vx / dist) * force);
      dy.set(a.id, dy.get(a.id)! - (vy / dist) * force);
      dx.set(b.id, dx.get(b.id)! + (vx / dist) * force);
      dy.set(b.id, dy.get(b.id)! + (vy / dist) * force);
    }

    for (const id of ids) {
      const n = nodes.get(id)!;
      const mx = dx.get(id)!;
      const my = dy.get(id)!;
      const len = Math.max(Math.hypot(mx, my), 1e-6);
      n.x += (mx / len) * Math.min(len, temperature);
      n.y += (my / len) * Math.min(len, temperature);
      n.x = Math.min(width - 10, Math.max(10, n.x));
      n.y = Math.min(height - 10, Math.max(10, n.y));
    }
    temperature *= 0.95;
  }
  return nodes;
}
