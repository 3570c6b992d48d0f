// Deterministic force-directed placement. Positions computed once per
// session are pinned: re-layout after a mutation only places vertices that
// have never been seen, so successive pictures stay visually comparable.

export interface Point {
  x: number;
  y: number;
}

export type Positions = Map<number, Point>;

const WIDTH = 420;
const HEIGHT = 320;
const ITERATIONS = 150;

export function layoutQuiver(
  n: number,
  edges: Array<[number, number]>,
  pinned?: Positions
): Positions {
  const pos: Positions = new Map();
  for (let v = 1; v <= n; v++) {
    const prev = pinned?.get(v);
    if (prev) {
      pos.set(v, { x: prev.x, y: prev.y });
    } else {
      const angle = (2 * Math.PI * (v - 1)) / n - Math.PI / 2;
      pos.set(v, {
        x: WIDTH / 2 + 0.36 * WIDTH * Math.cos(angle),
        y: HEIGHT / 2 + 0.36 * HEIGHT * Math.sin(angle),
      });
    }
  }
  if (pinned && pinned.size >= n) {
    return pos; // everything pinned, nothing to relax
  }
  const movable = new Set<number>();
  for (let v = 1; v <= n; v++) {
    if (!pinned?.has(v)) movable.add(v);
  }
  if (pinned && movable.size === 0) return pos;
  const target = 120;
  for (let step = 0; step < ITERATIONS; step++) {
    const force = new Map<number, Point>();
    for (const v of movable) force.set(v, { x: 0, y: 0 });
    for (let u = 1; u <= n; u++) {
      for (let v = u + 1; v <= n; v++) {
        const pu = pos.get(u)!;
        const pv = pos.get(v)!;
        let dx = pv.x - pu.x;
        let dy = pv.y - pu.y;
        const dist = Math.max(Math.hypot(dx, dy), 1);
        dx /= dist;
        dy /= dist;
        const repel = (target * target) / dist;
        if (movable.has(u)) {
          const f = force.get(u)!;
          f.x -= repel * dx;
          f.y -= repel * dy;
        }
        if (movable.has(v)) {
          const f = force.get(v)!;
          f.x += repel * dx;
          f.y += repel * dy;
        }
      }
    }
    for (const [u, v] of edges) {
      const pu = pos.get(u)!;
      const pv = pos.get(v)!;
      let dx = pv.x - pu.x;
      let dy = pv.y - pu.y;
      const dist = Math.max(Math.hypot(dx, dy), 1);
      const pull = (dist - target) * 0.08;
      dx /= dist;
      dy /= dist;
      if (movable.has(u)) {
        const f = force.get(u)!;
        f.x += pull * dx;
        f.y += pull * dy;
      }
      if (movable.has(v)) {
        const f = force.get(v)!;
        f.x -= pull * dx;
        f.y -= pull * dy;
      }
    }
    const damp = 0.02;
    for (const v of movable) {
      const p = pos.get(v)!;
      const f = force.get(v)!;
      p.x = Math.min(Math.max(p.x + damp * f.x, 24), WIDTH - 24);
      p.y = Math.min(Math.max(p.y + damp * f.y, 24), HEIGHT - 24);
    }
  }
  return pos;
}

export const LAYOUT_SIZE = { width: WIDTH, height: HEIGHT };
