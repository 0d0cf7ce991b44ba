/** Shared shapes for the ring nim client. */

export type Variant = "cn" | "scn";

export type PileStatus = "P" | "N";

export interface Rules {
  variant: Variant;
  k: number;
}

/** A move in client coordinates: a start pile plus one removal per window slot. */
export interface Move {
  windowStart: number;
  removals: number[];
}

export type MoveReason = "window" | "removal-bounds" | "zero-total";

export type MoveVerdict =
  | { ok: true }
  | { ok: false; reason: MoveReason; message: string };

/** Wire format the service uses for a move plus its outcome. */
export interface WireMove {
  window_start: number;
  removals: number[];
  result: number[];
}

export interface StatusResponse {
  canonical: number[];
  status: PileStatus;
  winning_moves: WireMove[];
}

export interface WireReply extends WireMove {
  status: PileStatus;
}

export interface ApplyResponse extends StatusResponse {
  applied: {
    result: number[];
    status: PileStatus;
  };
  reply: WireReply | null;
}

export interface ErrorDetail {
  code: string;
  message: string;
  reason?: MoveReason;
}

export type Player = "you" | "engine";

export interface LogEntry {
  by: Player;
  move: Move;
  /** Board left behind after the move, in ring order. */
  result: number[];
}

export interface SessionState {
  rules: Rules;
  /** Current board in ring order, always equal to the last log result. */
  piles: number[];
  toMove: Player;
  log: LogEntry[];
  /** Status of the current board for the player about to move. */
  status: PileStatus;
  over: boolean;
  winner: Player | null;
}
