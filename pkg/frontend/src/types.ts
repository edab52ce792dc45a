/** Wire types for the /api/v1 protocol. The server is authoritative. */

export type Pair = [number, number];

export type PlayerName = "maker" | "breaker";
export type GameStatus = "ongoing" | "maker_won" | "breaker_won";
export type Bias = "1:1" | "1:2";

export interface HistoryEntry {
  player: PlayerName;
  diagonals: Pair[];
}

export interface BreakerStructure {
  offset: number;
  net: number;
  beams: number[];
  net_edges: Pair[];
  beam_edges: Pair[];
}

export interface GameStateJson {
  n: number;
  maker: Pair[];
  breaker: Pair[];
  turn: PlayerName;
  status: GameStatus;
  history: HistoryEntry[];
  witness: Pair[] | null;
  breaker_structure: BreakerStructure | null;
  engine_reply?: Pair[];
}

export interface CreateRequest {
  n: number;
  human: PlayerName | "none";
  bias: Bias;
  first: PlayerName;
}

export interface CreateResponse {
  id: string;
  state: GameStateJson;
}

export interface ErrorBody {
  error: "occupied" | "not_your_turn" | "bad_request" | "not_found" | "finished";
  detail: string;
}

export interface ReplayFrameState {
  maker: Pair[];
  breaker: Pair[];
  turn: PlayerName;
}
