/** Board geometry and the per-diagonal render model.
 *
 * The polygon sits on a circle; diagonals render as chords. Clicks hit
 * the nearest chord within a pixel tolerance. Everything here is pure
 * presentation: ownership and legality always come from the server state.
 */

import type { GameStateJson, Pair } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export function vertexPositions(
  n: number,
  cx: number,
  cy: number,
  radius: number,
): Point[] {
  const points: Point[] = [];
  for (let k = 0; k < n; k++) {
    // vertex 0 at the top, clockwise
    const angle = -Math.PI / 2 + (2 * Math.PI * k) / n;
    points.push({ x: cx + radius * Math.cos(angle), y: cy + radius * Math.sin(angle) });
  }
  return points;
}

/** All diagonals of the n-gon as canonical [i, j] pairs, i < j. */
export function allDiagonals(n: number): Pair[] {
  const out: Pair[] = [];
  for (let i = 0; i < n; i++) {
    for (let j = i + 2; j < n; j++) {
      if (j - i <= n - 2) out.push([i, j]);
    }
  }
  return out;
}

export function pairKey(pair: Pair): string {
  return `${pair[0]}-${pair[1]}`;
}

export function samePair(a: Pair, b: Pair): boolean {
  return a[0] === b[0] && a[1] === b[1];
}

function distanceToSegment(p: Point, a: Point, b: Point): number {
  const vx = b.x - a.x;
  const vy = b.y - a.y;
  const len2 = vx * vx + vy * vy;
  let t = len2 === 0 ? 0 : ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2;
  t = Math.max(0, Math.min(1, t));
  const qx = a.x + t * vx;
  const qy = a.y + t * vy;
  return Math.hypot(p.x - qx, p.y - qy);
}

/** The chord closest to (x, y) within `tolerance` pixels, or null. */
export function nearestChord(
  n: number,
  positions: Point[],
  x: number,
  y: number,
  tolerance: number,
): Pair | null {
  let best: Pair | null = null;
  let bestDistance = tolerance;
  for (const pair of allDiagonals(n)) {
    const d = distanceToSegment({ x, y }, positions[pair[0]], positions[pair[1]]);
    if (d < bestDistance || (best !== null && d === bestDistance && lessPair(pair, best))) {
      best = pair;
      bestDistance = d;
    }
  }
  return best;
}

function lessPair(a: Pair, b: Pair): boolean {
  return a[0] !== b[0] ? a[0] < b[0] : a[1] < b[1];
}

export type ChordOwner = "unclaimed" | "maker" | "breaker";

export interface ChordView {
  pair: Pair;
  owner: ChordOwner;
  lastMove: boolean;
  hint: boolean;
  staged: boolean;
  witness: boolean;
  net: boolean;
  beam: boolean;
}

export interface RenderModel {
  n: number;
  chords: ChordView[];
  banner: string;
}

/** Derive the visual state of every chord purely from the server state
 * (plus transient hint/staged marks held by the controller). */
export function renderModel(
  state: GameStateJson,
  hints: Pair[],
  staged: Pair[],
): RenderModel {
  const owners = new Map<string, ChordOwner>();
  for (const pair of state.maker) owners.set(pairKey(pair), "maker");
  for (const pair of state.breaker) owners.set(pairKey(pair), "breaker");
  const last = state.history.length
    ? state.history[state.history.length - 1].diagonals
    : [];
  const lastKeys = new Set(last.map(pairKey));
  const hintKeys = new Set(hints.map(pairKey));
  const stagedKeys = new Set(staged.map(pairKey));
  const witnessKeys = new Set((state.witness ?? []).map(pairKey));
  const netKeys = new Set((state.breaker_structure?.net_edges ?? []).map(pairKey));
  const beamKeys = new Set((state.breaker_structure?.beam_edges ?? []).map(pairKey));

  const chords: ChordView[] = allDiagonals(state.n).map((pair) => {
    const key = pairKey(pair);
    return {
      pair,
      owner: owners.get(key) ?? "unclaimed",
      lastMove: lastKeys.has(key),
      hint: hintKeys.has(key),
      staged: stagedKeys.has(key),
      witness: witnessKeys.has(key),
      net: state.status === "breaker_won" && netKeys.has(key),
      beam: state.status === "breaker_won" && beamKeys.has(key),
    };
  });

  const banner =
    state.status === "ongoing"
      ? `${state.turn} to move`
      : state.status === "maker_won"
        ? "maker wins: triangulation complete"
        : "breaker wins: every triangulation is blocked";

  return { n: state.n, chords, banner };
}
