/** Client-side history replay for the slider.
 *
 * Rebuilds the claim sets after each move from the history alone, without
 * duplicating any game rules: claims accumulate and the turn marker simply
 * alternates, exactly as the server applies moves.
 */

import type { GameStateJson, HistoryEntry, Pair, PlayerName } from "./types.js";

export interface ReplayFrame {
  maker: Pair[];
  breaker: Pair[];
  turn: PlayerName;
  moveIndex: number;
}

function sortPairs(pairs: Pair[]): Pair[] {
  return [...pairs].sort((a, b) => (a[0] - b[0]) || (a[1] - b[1]));
}

/** Frames 0..len(history): frame k is the board after k moves. */
export function replayFrames(
  history: HistoryEntry[],
  firstMover: PlayerName,
): ReplayFrame[] {
  const frames: ReplayFrame[] = [
    { maker: [], breaker: [], turn: firstMover, moveIndex: 0 },
  ];
  let maker: Pair[] = [];
  let breaker: Pair[] = [];
  for (let k = 0; k < history.length; k++) {
    const move = history[k];
    if (move.player === "maker") maker = maker.concat(move.diagonals);
    else breaker = breaker.concat(move.diagonals);
    frames.push({
      maker: sortPairs(maker),
      breaker: sortPairs(breaker),
      turn: move.player === "maker" ? "breaker" : "maker",
      moveIndex: k + 1,
    });
  }
  return frames;
}

/** Canonical serialization of the replay-comparable part of a state. */
export function comparableKey(state: {
  maker: Pair[];
  breaker: Pair[];
  turn: PlayerName;
}): string {
  return JSON.stringify({
    maker: sortPairs(state.maker),
    breaker: sortPairs(state.breaker),
    turn: state.turn,
  });
}

/** True iff replaying the final state's history reproduces, byte for byte,
 * every intermediate snapshot the server reported during play. */
export function replayMatchesSnapshots(
  finalState: GameStateJson,
  snapshots: GameStateJson[],
): boolean {
  const first = finalState.history[0]?.player ?? finalState.turn;
  const frames = replayFrames(finalState.history, first);
  for (const snapshot of snapshots) {
    const frame = frames[snapshot.history.length];
    if (frame === undefined) return false;
    const expected = comparableKey({
      maker: snapshot.maker,
      breaker: snapshot.breaker,
      turn: snapshot.turn,
    });
    if (comparableKey(frame) !== expected) return false;
  }
  return true;
}
