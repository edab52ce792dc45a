/** Game flow: turn gating, click staging, snapshots, replay.
 *
 * The controller never sends a request the server would reject for
 * turn-order reasons: clicks are accepted only when the game is ongoing,
 * it is the human's turn, nothing is in flight, and the chord is locally
 * unclaimed (occupied clicks are reported without a request). The server
 * remains authoritative for everything else.
 */

import { ApiClient, ApiError } from "./api.js";
import { pairKey, samePair } from "./board.js";
import { replayFrames } from "./replay.js";
import type {
  Bias,
  CreateRequest,
  GameStateJson,
  Pair,
  PlayerName,
  ReplayFrameState,
} from "./types.js";

export interface Notice {
  kind: "error" | "info";
  text: string;
}

export type ClickOutcome =
  | "submitted"
  | "staged"
  | "blocked_turn"
  | "blocked_finished"
  | "blocked_occupied"
  | "blocked_busy";

export class GameController {
  state: GameStateJson | null = null;
  gameId: string | null = null;
  humanRole: PlayerName | "none" = "maker";
  bias: Bias = "1:1";
  hints: Pair[] = [];
  staged: Pair[] = [];
  notices: Notice[] = [];
  snapshots: GameStateJson[] = [];
  private inFlight = false;

  constructor(private readonly api: ApiClient) {}

  get busy(): boolean {
    return this.inFlight;
  }

  async newGame(request: CreateRequest): Promise<void> {
    this.inFlight = true;
    try {
      const created = await this.api.createGame(request);
      this.gameId = created.id;
      this.humanRole = request.human;
      this.bias = request.bias;
      this.state = created.state;
      this.snapshots = [created.state];
      this.hints = [];
      this.staged = [];
      this.notices = [];
    } finally {
      this.inFlight = false;
    }
  }

  /** Diagonals the human must submit in one turn (the opening double for
   * the 1:2 Breaker, one otherwise). */
  turnQuota(): number {
    if (!this.state || this.humanRole === "none") return 1;
    if (
      this.bias === "1:2" &&
      this.humanRole === "breaker" &&
      this.state.breaker.length === 0
    ) {
      return 2;
    }
    return 1;
  }

  isClaimed(pair: Pair): boolean {
    if (!this.state) return false;
    const key = pairKey(pair);
    return (
      this.state.maker.some((d) => pairKey(d) === key) ||
      this.state.breaker.some((d) => pairKey(d) === key)
    );
  }

  /** Gate a board click; submits (or stages) only moves the server can
   * accept on turn-order grounds. */
  async click(pair: Pair): Promise<ClickOutcome> {
    if (!this.state || this.state.status !== "ongoing") {
      return "blocked_finished";
    }
    if (this.inFlight) return "blocked_busy";
    if (this.humanRole === "none" || this.state.turn !== this.humanRole) {
      this.push("info", "not your turn");
      return "blocked_turn";
    }
    if (this.isClaimed(pair)) {
      this.push("error", `diagonal ${pairKey(pair)} is occupied`);
      return "blocked_occupied";
    }
    if (this.staged.some((d) => samePair(d, pair))) {
      this.staged = this.staged.filter((d) => !samePair(d, pair));
      return "staged";
    }
    this.staged = [...this.staged, pair];
    if (this.staged.length < this.turnQuota()) return "staged";
    const move = this.staged;
    this.staged = [];
    await this.submit(move);
    return "submitted";
  }

  async submit(diagonals: Pair[]): Promise<void> {
    if (!this.gameId) return;
    this.inFlight = true;
    try {
      const next = await this.api.submitMove(this.gameId, diagonals);
      this.state = next;
      this.snapshots = [...this.snapshots, next];
      this.hints = [];
    } catch (error) {
      if (error instanceof ApiError) {
        this.push("error", `${error.code}: ${error.message}`);
      } else {
        this.push("error", String(error));
      }
    } finally {
      this.inFlight = false;
    }
  }

  async requestHint(): Promise<Pair[]> {
    if (!this.gameId || this.inFlight) return [];
    this.inFlight = true;
    try {
      this.hints = await this.api.hint(this.gameId);
      return this.hints;
    } catch (error) {
      if (error instanceof ApiError) this.push("error", `${error.code}: ${error.message}`);
      return [];
    } finally {
      this.inFlight = false;
    }
  }

  /** Delete the server session and clear local state. */
  async endGame(): Promise<void> {
    if (!this.gameId) return;
    const id = this.gameId;
    this.gameId = null;
    this.state = null;
    this.snapshots = [];
    this.hints = [];
    this.staged = [];
    await this.api.deleteGame(id);
  }

  /** Board content at history step `index`, derived client-side. */
  frameAt(index: number): ReplayFrameState | null {
    if (!this.state) return null;
    const first = this.state.history[0]?.player ?? this.state.turn;
    const frames = replayFrames(this.state.history, first);
    const frame = frames[Math.max(0, Math.min(index, frames.length - 1))];
    return { maker: frame.maker, breaker: frame.breaker, turn: frame.turn };
  }

  replaySteps(): number {
    return this.state ? this.state.history.length : 0;
  }

  dismissNotice(index: number): void {
    this.notices = this.notices.filter((_, k) => k !== index);
  }

  private push(kind: Notice["kind"], text: string): void {
    this.notices = [...this.notices, { kind, text }];
  }
}
