/**
 * Session lifecycle for one game against the engine.
 *
 * State transitions are pure: each helper takes the old state and returns a
 * fresh one, so the UI layer can diff and re-render without hidden coupling.
 * Two invariants hold throughout a session: the current board always equals
 * the result of the last log entry, and the game is over exactly when the
 * board is terminal.
 */

import type { ServiceClient } from "./api.js";
import type {
  Move,
  MoveVerdict,
  Rules,
  SessionState,
} from "./types.js";
import { isTerminal, validateMove, validateStart } from "./validate.js";

/** A move the local validator refused; never sent over the wire. */
export class IllegalMoveError extends Error {
  readonly verdict: Extract<MoveVerdict, { ok: false }>;

  constructor(verdict: Extract<MoveVerdict, { ok: false }>) {
    super(verdict.message);
    this.name = "IllegalMoveError";
    this.verdict = verdict;
  }
}

/** Start a session: check the board locally, then ask the service for its status. */
export async function newGame(
  api: ServiceClient,
  rules: Rules,
  piles: number[],
): Promise<SessionState> {
  const problem = validateStart(rules.variant, rules.k, piles);
  if (problem !== null) {
    throw new IllegalMoveError({ ok: false, reason: "window", message: problem });
  }
  const status = await api.status(rules, piles);
  return {
    rules,
    piles: [...piles],
    toMove: "you",
    log: [],
    status: status.status,
    over: false,
    winner: null,
  };
}

/**
 * Play the human's move and the engine's reply in one exchange.
 *
 * The move is validated locally first; a rejected move raises
 * IllegalMoveError before any request is made.  The returned state contains
 * one log entry for the human and, unless the human just took the last
 * stone, one for the engine.
 */
export async function submitHumanMove(
  api: ServiceClient,
  state: SessionState,
  move: Move,
): Promise<SessionState> {
  if (state.over || state.toMove !== "you") {
    throw new IllegalMoveError({
      ok: false,
      reason: "window",
      message: "it is not your turn",
    });
  }
  const verdict = validateMove(state.rules.variant, state.rules.k, state.piles, move);
  if (!verdict.ok) {
    throw new IllegalMoveError(verdict);
  }

  const resp = await api.apply(state.rules, state.piles, move, true);
  const log = [...state.log, { by: "you" as const, move, result: resp.applied.result }];

  if (isTerminal(state.rules.variant, resp.applied.result)) {
    return {
      ...state,
      piles: resp.applied.result,
      toMove: "engine",
      log,
      status: resp.applied.status,
      over: true,
      winner: "you",
    };
  }

  const reply = resp.reply;
  if (reply === null) {
    throw new Error("service sent no reply for a live board");
  }
  log.push({
    by: "engine",
    move: { windowStart: reply.window_start, removals: reply.removals },
    result: reply.result,
  });
  const engineWon = isTerminal(state.rules.variant, reply.result);
  return {
    ...state,
    piles: reply.result,
    toMove: "you",
    log,
    status: reply.status,
    over: engineWon,
    winner: engineWon ? "engine" : null,
  };
}

/** Banner text for the current state, or null when nothing needs saying. */
export function bannerFor(state: SessionState): string | null {
  if (state.over) {
    return state.winner === "you"
      ? "you took the last stone: you win"
      : "the engine took the last stone: the engine wins";
  }
  if (state.toMove === "you" && state.status === "P") {
    return "you are in a losing position against perfect play";
  }
  return null;
}
